#include "mtlog/interval.hpp"

#include <algorithm>

namespace mtlog {

std::string TimeBound::to_string() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    default: return std::to_string(value_);
  }
}

std::optional<Interval> Interval::make(TimeBound lo, bool lo_closed, TimeBound hi, bool hi_closed) {
  if (lo.is_pos_inf() || hi.is_neg_inf()) return std::nullopt;
  if (!lo.is_finite() && lo_closed) return std::nullopt;
  if (!hi.is_finite() && hi_closed) return std::nullopt;
  if (lo.is_finite() && !lo_closed) lo = lo.plus(1);
  if (hi.is_finite() && !hi_closed) hi = hi.plus(-1);
  if (!(lo <= hi)) return std::nullopt;
  return Interval(lo, hi);
}

std::string Interval::to_string() const {
  std::string out = lo_.is_finite() ? "[" : "(";
  out += lo_.to_string();
  out += ",";
  out += hi_.to_string();
  out += hi_.is_finite() ? "]" : ")";
  return out;
}

IntervalSet IntervalSet::of(std::vector<Interval> parts) {
  IntervalSet out;
  if (parts.empty()) return out;
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    return a.lo() < b.lo() || (a.lo() == b.lo() && a.hi() < b.hi());
  });
  out.parts_.push_back(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    Interval& cur = out.parts_.back();
    const Interval& next = parts[i];
    if (next.lo() <= cur.hi().plus(1)) {
      cur = Interval::from_bounds(cur.lo(), max(cur.hi(), next.hi()));
    } else {
      out.parts_.push_back(next);
    }
  }
  return out;
}

bool IntervalSet::contains(TimePoint t) const {
  auto it = std::partition_point(parts_.begin(), parts_.end(), [t](const Interval& iv) {
    return iv.hi() < TimeBound::finite(t);
  });
  return it != parts_.end() && it->lo() <= TimeBound::finite(t);
}

std::optional<TimePoint> IntervalSet::min_finite_endpoint() const {
  for (const Interval& iv : parts_) {
    if (iv.lo().is_finite()) return iv.lo().value();
    if (iv.hi().is_finite()) return iv.hi().value();
  }
  return std::nullopt;
}

std::optional<TimePoint> IntervalSet::max_finite_endpoint() const {
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    if (it->hi().is_finite()) return it->hi().value();
    if (it->lo().is_finite()) return it->lo().value();
  }
  return std::nullopt;
}

std::string IntervalSet::to_string() const {
  std::string out;
  for (const Interval& iv : parts_) {
    if (!out.empty()) out += ";";
    out += iv.to_string();
  }
  return out;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> parts(a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return IntervalSet::of(std::move(parts));
}

IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> parts;
  auto ai = a.parts().begin();
  auto bi = b.parts().begin();
  while (ai != a.parts().end() && bi != b.parts().end()) {
    TimeBound lo = max(ai->lo(), bi->lo());
    TimeBound hi = min(ai->hi(), bi->hi());
    if (lo <= hi) parts.push_back(Interval::from_bounds(lo, hi));
    if (ai->hi() < bi->hi()) {
      ++ai;
    } else {
      ++bi;
    }
  }
  return IntervalSet::of(std::move(parts));
}

IntervalSet set_complement(const IntervalSet& a) {
  if (a.empty()) return IntervalSet::full();
  std::vector<Interval> parts;
  const Interval& first = a.parts().front();
  if (first.lo().is_finite()) {
    parts.push_back(Interval::from_bounds(TimeBound::neg_inf(), first.lo().plus(-1)));
  }
  for (std::size_t i = 0; i + 1 < a.parts().size(); ++i) {
    // Canonical sets leave a gap of at least one integer between parts.
    parts.push_back(Interval::from_bounds(a.parts()[i].hi().plus(1), a.parts()[i + 1].lo().plus(-1)));
  }
  const Interval& last = a.parts().back();
  if (last.hi().is_finite()) {
    parts.push_back(Interval::from_bounds(last.hi().plus(1), TimeBound::pos_inf()));
  }
  return IntervalSet::of(std::move(parts));
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
  return set_intersect(a, set_complement(b));
}

bool is_subset(const IntervalSet& a, const IntervalSet& b) {
  return set_intersect(a, b) == a;
}

IntervalSet shift(const IntervalSet& s, TimePoint k) {
  std::vector<Interval> parts;
  parts.reserve(s.parts().size());
  for (const Interval& iv : s.parts()) {
    parts.push_back(Interval::from_bounds(iv.lo().plus(k), iv.hi().plus(k)));
  }
  return IntervalSet::of(std::move(parts));
}

IntervalSet reflect(const IntervalSet& s) {
  std::vector<Interval> parts;
  parts.reserve(s.parts().size());
  for (const Interval& iv : s.parts()) {
    parts.push_back(Interval::from_bounds(iv.hi().negated(), iv.lo().negated()));
  }
  return IntervalSet::of(std::move(parts));
}

IntervalSet dilate_past(const IntervalSet& s, const Interval& delta) {
  assert(delta.non_negative());
  const TimePoint dl = delta.lo().value();
  const TimeBound dh = delta.hi();
  std::vector<Interval> parts;
  for (const Interval& iv : s.parts()) {
    TimeBound lo = iv.lo().plus(dl);
    TimeBound hi = (iv.hi().is_pos_inf() || dh.is_pos_inf())
                       ? TimeBound::pos_inf()
                       : TimeBound::finite(iv.hi().value() + dh.value());
    parts.push_back(Interval::from_bounds(lo, hi));
  }
  return IntervalSet::of(std::move(parts));
}

IntervalSet dilate_future(const IntervalSet& s, const Interval& delta) {
  assert(delta.non_negative());
  const TimePoint dl = delta.lo().value();
  const TimeBound dh = delta.hi();
  std::vector<Interval> parts;
  for (const Interval& iv : s.parts()) {
    TimeBound lo = (iv.lo().is_neg_inf() || dh.is_pos_inf())
                       ? TimeBound::neg_inf()
                       : TimeBound::finite(iv.lo().value() - dh.value());
    TimeBound hi = iv.hi().plus(-dl);
    parts.push_back(Interval::from_bounds(lo, hi));
  }
  return IntervalSet::of(std::move(parts));
}

IntervalSet erode_past(const IntervalSet& s, const Interval& delta) {
  assert(delta.non_negative());
  const TimePoint dl = delta.lo().value();
  const TimeBound dh = delta.hi();
  std::vector<Interval> parts;
  for (const Interval& iv : s.parts()) {
    // Points t whose whole window [t-dh, t-dl] fits inside this part.
    TimeBound lo;
    if (iv.lo().is_neg_inf()) {
      lo = TimeBound::neg_inf();
    } else if (dh.is_pos_inf()) {
      continue;  // window reaches -inf, cannot fit a bounded part
    } else {
      lo = TimeBound::finite(iv.lo().value() + dh.value());
    }
    TimeBound hi = iv.hi().plus(dl);
    if (lo <= hi) parts.push_back(Interval::from_bounds(lo, hi));
  }
  return IntervalSet::of(std::move(parts));
}

IntervalSet erode_future(const IntervalSet& s, const Interval& delta) {
  assert(delta.non_negative());
  const TimePoint dl = delta.lo().value();
  const TimeBound dh = delta.hi();
  std::vector<Interval> parts;
  for (const Interval& iv : s.parts()) {
    TimeBound lo = iv.lo().plus(-dl);
    TimeBound hi;
    if (iv.hi().is_pos_inf()) {
      hi = TimeBound::pos_inf();
    } else if (dh.is_pos_inf()) {
      continue;
    } else {
      hi = TimeBound::finite(iv.hi().value() - dh.value());
    }
    if (lo <= hi) parts.push_back(Interval::from_bounds(lo, hi));
  }
  return IntervalSet::of(std::move(parts));
}

IntervalSet since_set(const IntervalSet& s1, const IntervalSet& s2, const Interval& delta) {
  assert(delta.non_negative());
  const TimePoint dl = delta.lo().value();
  const TimeBound dh = delta.hi();
  std::vector<Interval> parts;
  for (const Interval& witness : s2.parts()) {
    // Witnesses t' whose successor lies inside a run [c,d] of s1 validate
    // every t up to d+1; the union over a contiguous witness range is again
    // one interval because consecutive contributions overlap or touch.
    for (const Interval& run : s1.parts()) {
      const TimeBound d = run.hi();
      TimeBound w_lo = max(witness.lo(), run.lo().plus(-1));
      TimeBound w_hi = min(witness.hi(), min(d.plus(-1), d.plus(1 - dl)));
      if (!(w_lo <= w_hi)) continue;
      TimeBound lo = w_lo.plus(dl);
      TimeBound hi = (w_hi.is_pos_inf() || dh.is_pos_inf())
                         ? TimeBound::pos_inf()
                         : TimeBound::finite(w_hi.value() + dh.value());
      hi = min(hi, d.plus(1));
      parts.push_back(Interval::from_bounds(lo, hi));
    }
    // Witnesses t' with t'+1 outside s1 only validate t in {t', t'+1},
    // where the strict interior (t', t) is empty.
    if (dl <= 1) {
      IntervalSet lone = set_intersect(IntervalSet(witness), shift(set_complement(s1), -1));
      TimePoint cap = dh.is_pos_inf() ? 1 : std::min<TimePoint>(dh.value(), 1);
      IntervalSet vac = dilate_past(lone, Interval::closed(dl, cap));
      parts.insert(parts.end(), vac.parts().begin(), vac.parts().end());
    }
  }
  return IntervalSet::of(std::move(parts));
}

IntervalSet until_set(const IntervalSet& s1, const IntervalSet& s2, const Interval& delta) {
  return reflect(since_set(reflect(s1), reflect(s2), delta));
}

}  // namespace mtlog
