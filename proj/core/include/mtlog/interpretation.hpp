#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "mtlog/ast.hpp"
#include "mtlog/interval.hpp"

namespace mtlog {

/// Three truth values ordered false <= undef <= true.
enum class Truth3 { False, Undef, True };

constexpr Truth3 truth3_from_bools(bool lo, bool hi) {
  // (true, false) would violate consistency; callers guarantee lo implies hi.
  return lo ? Truth3::True : (hi ? Truth3::Undef : Truth3::False);
}

constexpr Truth3 truth3_negate(Truth3 v) {
  switch (v) {
    case Truth3::False: return Truth3::True;
    case Truth3::True: return Truth3::False;
    default: return Truth3::Undef;
  }
}

constexpr Truth3 truth3_meet(Truth3 a, Truth3 b) { return a < b ? a : b; }

std::string to_string(Truth3 v);

/// Total map from ground atoms to canonical interval sets; atoms without an
/// entry are false everywhere. Empty extensions are never stored, so
/// structural equality is semantic equality.
class Interpretation {
public:
  Interpretation() = default;

  bool empty() const { return extents_.empty(); }
  const std::map<GroundAtom, IntervalSet>& extents() const { return extents_; }

  /// Extension of the atom (the empty set when absent).
  const IntervalSet& get(const GroundAtom& atom) const;
  void set(GroundAtom atom, IntervalSet extent);
  /// Unions the given extent into the atom's extension.
  void add(const GroundAtom& atom, const IntervalSet& extent);
  bool holds_at(const GroundAtom& atom, TimePoint t) const { return get(atom).contains(t); }

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

  /// One "Atom@intervals" line per atom, sorted lexicographically.
  std::string dump() const;

  std::optional<TimePoint> min_finite_endpoint() const;
  std::optional<TimePoint> max_finite_endpoint() const;

private:
  std::map<GroundAtom, IntervalSet> extents_;
};

Interpretation interp_union(const Interpretation& a, const Interpretation& b);
Interpretation interp_intersect(const Interpretation& a, const Interpretation& b);
bool interp_subset(const Interpretation& a, const Interpretation& b);

/// Consistent pair: everything true in lo is at least undefined in hi.
struct ThreeValuedInterpretation {
  Interpretation lo;
  Interpretation hi;

  bool consistent() const { return interp_subset(lo, hi); }
  bool exact() const { return lo == hi; }
  Truth3 value_at(const GroundAtom& atom, TimePoint t) const {
    return truth3_from_bools(lo.holds_at(atom, t), hi.holds_at(atom, t));
  }

  friend bool operator==(const ThreeValuedInterpretation&, const ThreeValuedInterpretation&) = default;

  /// "# true" block then "# undef" block in dump line format.
  std::string dump() const;
};

ThreeValuedInterpretation exact_pair(Interpretation i);

/// Dataset closure: each fact contributes its interval.
Interpretation interpretation_from_dataset(const Dataset& d);

/// Reads dump/fact lines back into an interpretation.
Interpretation parse_interpretation(std::string_view text);
/// Reads a two-block three-valued dump back.
ThreeValuedInterpretation parse_three_valued_dump(std::string_view text);

}  // namespace mtlog
