#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mtlog {

/// Timepoints live on the integer timeline.
using TimePoint = std::int64_t;

/// An integer endpoint extended with -inf and +inf.
class TimeBound {
public:
  enum class Kind { NegInf, Finite, PosInf };

  constexpr TimeBound() : kind_(Kind::Finite), value_(0) {}

  static constexpr TimeBound neg_inf() { return TimeBound(Kind::NegInf, 0); }
  static constexpr TimeBound pos_inf() { return TimeBound(Kind::PosInf, 0); }
  static constexpr TimeBound finite(TimePoint t) { return TimeBound(Kind::Finite, t); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  constexpr TimePoint value() const {
    assert(is_finite());
    return value_;
  }

  /// Adds a finite offset; infinities absorb.
  constexpr TimeBound plus(TimePoint d) const {
    return is_finite() ? finite(value_ + d) : *this;
  }

  constexpr TimeBound negated() const {
    switch (kind_) {
      case Kind::NegInf: return pos_inf();
      case Kind::PosInf: return neg_inf();
      default: return finite(-value_);
    }
  }

  friend constexpr bool operator==(const TimeBound& a, const TimeBound& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(const TimeBound& a, const TimeBound& b) {
    auto rank = [](Kind k) { return k == Kind::NegInf ? 0 : (k == Kind::Finite ? 1 : 2); };
    if (auto c = rank(a.kind_) <=> rank(b.kind_); c != 0) return c;
    if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

private:
  constexpr TimeBound(Kind k, TimePoint v) : kind_(k), value_(v) {}
  Kind kind_;
  TimePoint value_;
};

constexpr TimeBound min(TimeBound a, TimeBound b) { return a <= b ? a : b; }
constexpr TimeBound max(TimeBound a, TimeBound b) { return a >= b ? a : b; }

/// A non-empty convex set of integer timepoints in canonical form: finite
/// endpoints are inclusive, infinite endpoints are open by construction.
class Interval {
public:
  /// [a,b] with a <= b.
  static Interval closed(TimePoint a, TimePoint b) {
    assert(a <= b);
    return Interval(TimeBound::finite(a), TimeBound::finite(b));
  }
  static Interval point(TimePoint t) { return closed(t, t); }
  static Interval at_least(TimePoint a) { return Interval(TimeBound::finite(a), TimeBound::pos_inf()); }
  static Interval at_most(TimePoint b) { return Interval(TimeBound::neg_inf(), TimeBound::finite(b)); }
  static Interval full() { return Interval(TimeBound::neg_inf(), TimeBound::pos_inf()); }

  /// Normalizes bracket notation onto the integer timeline: open finite
  /// endpoints shrink inward ((a,  -> [a+1,  and  ,b) -> ,b-1]). Returns
  /// nullopt when the normalized interval is empty or an infinite endpoint
  /// is marked closed.
  static std::optional<Interval> make(TimeBound lo, bool lo_closed, TimeBound hi, bool hi_closed);

  /// Canonical bounds, caller guarantees lo <= hi.
  static Interval from_bounds(TimeBound lo, TimeBound hi) { return Interval(lo, hi); }

  TimeBound lo() const { return lo_; }
  TimeBound hi() const { return hi_; }

  bool lo_unbounded() const { return lo_.is_neg_inf(); }
  bool hi_unbounded() const { return hi_.is_pos_inf(); }

  bool contains(TimePoint t) const {
    return lo_ <= TimeBound::finite(t) && TimeBound::finite(t) <= hi_;
  }

  /// True when every member is >= 0 (the admissible range for operator deltas).
  bool non_negative() const { return TimeBound::finite(0) <= lo_; }

  friend bool operator==(const Interval&, const Interval&) = default;

  std::string to_string() const;

private:
  Interval(TimeBound lo, TimeBound hi) : lo_(lo), hi_(hi) {
    assert(lo_ <= hi_);
    assert(!lo_.is_pos_inf() && !hi_.is_neg_inf());
  }
  TimeBound lo_;
  TimeBound hi_;
};

/// A canonical finite union of intervals: sorted, pairwise disjoint and
/// non-adjacent on the integers, so structural equality is set equality.
class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(Interval iv) : parts_{iv} {}

  /// Normalizing constructor: sorts and merges overlapping or adjacent parts.
  static IntervalSet of(std::vector<Interval> parts);
  static IntervalSet full() { return IntervalSet(Interval::full()); }

  bool empty() const { return parts_.empty(); }
  std::span<const Interval> parts() const { return parts_; }
  bool contains(TimePoint t) const;
  bool is_full() const { return parts_.size() == 1 && parts_[0] == Interval::full(); }

  /// Smallest/largest finite endpoint mentioned anywhere in the set, if any.
  std::optional<TimePoint> min_finite_endpoint() const;
  std::optional<TimePoint> max_finite_endpoint() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

  /// ";"-joined interval list, e.g. "[0,5];[8,14]".
  std::string to_string() const;

private:
  std::vector<Interval> parts_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_complement(const IntervalSet& a);
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);
bool is_subset(const IntervalSet& a, const IntervalSet& b);

/// { t + k | t in s }
IntervalSet shift(const IntervalSet& s, TimePoint k);
/// { -t | t in s }
IntervalSet reflect(const IntervalSet& s);

/// { t | exists t' in s with t - t' in delta }: the extension of
/// "sometime in the past window delta".
IntervalSet dilate_past(const IntervalSet& s, const Interval& delta);
/// { t | exists t' in s with t' - t in delta }
IntervalSet dilate_future(const IntervalSet& s, const Interval& delta);
/// { t | forall t' with t - t' in delta : t' in s }: "always in the past
/// window delta".
IntervalSet erode_past(const IntervalSet& s, const Interval& delta);
/// { t | forall t' with t' - t in delta : t' in s }
IntervalSet erode_future(const IntervalSet& s, const Interval& delta);

/// { t | exists t' with t - t' in delta, t' in s2, and every integer strictly
/// between t' and t lies in s1 }. An empty strict interior satisfies the
/// universal condition vacuously.
IntervalSet since_set(const IntervalSet& s1, const IntervalSet& s2, const Interval& delta);
/// Future mirror of since_set.
IntervalSet until_set(const IntervalSet& s1, const IntervalSet& s2, const Interval& delta);

}  // namespace mtlog
