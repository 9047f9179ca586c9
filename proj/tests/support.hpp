#pragma once

// Shared test plumbing: pointwise reference oracles that recompute the
// temporal clauses by direct quantification over bounded sets, random
// generators, and small finite lattices. Oracles only use contains() on
// their inputs, never the interval arithmetic they are checking.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mtlog/ast.hpp"
#include "mtlog/consequence.hpp"
#include "mtlog/engines.hpp"
#include "mtlog/interpretation.hpp"
#include "mtlog/interval.hpp"
#include "mtlog/parser.hpp"

namespace testsupport {

using namespace mtlog;

// ---------- bounded-set pointwise oracles ----------

// Hull of all finite endpoints; callers guarantee bounded inputs.
inline std::pair<TimePoint, TimePoint> hull(std::initializer_list<const IntervalSet*> sets) {
  TimePoint lo = 0;
  TimePoint hi = 0;
  bool seen = false;
  for (const IntervalSet* s : sets) {
    auto a = s->min_finite_endpoint();
    auto b = s->max_finite_endpoint();
    if (a) {
      lo = seen ? std::min(lo, *a) : *a;
      hi = seen ? std::max(hi, *b) : *b;
      seen = true;
    }
  }
  return {lo, hi};
}

// Candidate points of [a, b] clamped one step beyond the hull; for bounded
// sets every point outside the hull behaves identically.
inline std::vector<TimePoint> candidates(TimeBound a, TimeBound b, TimePoint h_lo, TimePoint h_hi) {
  std::vector<TimePoint> out;
  if (!(a <= b)) return out;
  TimePoint lo = a.is_finite() ? std::max(a.value(), h_lo - 1) : h_lo - 1;
  TimePoint hi = b.is_finite() ? std::min(b.value(), h_hi + 1) : h_hi + 1;
  if (hi < lo) {
    if (b <= TimeBound::finite(h_lo)) {
      lo = hi;
    } else {
      hi = lo;
    }
  }
  for (TimePoint t = lo; t <= hi; ++t) out.push_back(t);
  return out;
}

inline bool oracle_dilate_past_at(const IntervalSet& s, const Interval& d, TimePoint t) {
  auto [h_lo, h_hi] = hull({&s});
  TimeBound a = d.hi().is_pos_inf() ? TimeBound::neg_inf() : TimeBound::finite(t - d.hi().value());
  TimeBound b = TimeBound::finite(t - d.lo().value());
  for (TimePoint tp : candidates(a, b, h_lo, h_hi)) {
    if (s.contains(tp)) return true;
  }
  return false;
}

inline bool oracle_dilate_future_at(const IntervalSet& s, const Interval& d, TimePoint t) {
  TimeBound a = TimeBound::finite(t + d.lo().value());
  TimeBound b = d.hi().is_pos_inf() ? TimeBound::pos_inf() : TimeBound::finite(t + d.hi().value());
  auto [h_lo, h_hi] = hull({&s});
  for (TimePoint tp : candidates(a, b, h_lo, h_hi)) {
    if (s.contains(tp)) return true;
  }
  return false;
}

inline bool oracle_erode_past_at(const IntervalSet& s, const Interval& d, TimePoint t) {
  TimeBound a = d.hi().is_pos_inf() ? TimeBound::neg_inf() : TimeBound::finite(t - d.hi().value());
  TimeBound b = TimeBound::finite(t - d.lo().value());
  auto [h_lo, h_hi] = hull({&s});
  for (TimePoint tp : candidates(a, b, h_lo, h_hi)) {
    if (!s.contains(tp)) return false;
  }
  return true;
}

inline bool oracle_erode_future_at(const IntervalSet& s, const Interval& d, TimePoint t) {
  TimeBound a = TimeBound::finite(t + d.lo().value());
  TimeBound b = d.hi().is_pos_inf() ? TimeBound::pos_inf() : TimeBound::finite(t + d.hi().value());
  auto [h_lo, h_hi] = hull({&s});
  for (TimePoint tp : candidates(a, b, h_lo, h_hi)) {
    if (!s.contains(tp)) return false;
  }
  return true;
}

inline bool oracle_since_at(const IntervalSet& s1, const IntervalSet& s2, const Interval& d, TimePoint t) {
  auto [h_lo, h_hi] = hull({&s1, &s2});
  TimeBound a = d.hi().is_pos_inf() ? TimeBound::neg_inf() : TimeBound::finite(t - d.hi().value());
  TimeBound b = TimeBound::finite(t - d.lo().value());
  for (TimePoint tp : candidates(a, b, std::min(h_lo, t), std::max(h_hi, t))) {
    if (!s2.contains(tp)) continue;
    bool interior_ok = true;
    for (TimePoint u = tp + 1; u < t; ++u) {
      if (!s1.contains(u)) {
        interior_ok = false;
        break;
      }
    }
    if (interior_ok) return true;
  }
  return false;
}

inline bool oracle_until_at(const IntervalSet& s1, const IntervalSet& s2, const Interval& d, TimePoint t) {
  auto [h_lo, h_hi] = hull({&s1, &s2});
  TimeBound a = TimeBound::finite(t + d.lo().value());
  TimeBound b = d.hi().is_pos_inf() ? TimeBound::pos_inf() : TimeBound::finite(t + d.hi().value());
  for (TimePoint tp : candidates(a, b, std::min(h_lo, t), std::max(h_hi, t))) {
    if (!s2.contains(tp)) continue;
    bool interior_ok = true;
    for (TimePoint u = t + 1; u < tp; ++u) {
      if (!s1.contains(u)) {
        interior_ok = false;
        break;
      }
    }
    if (interior_ok) return true;
  }
  return false;
}

// ---------- random generators ----------

inline IntervalSet random_bounded_set(std::mt19937_64& rng, TimePoint lo, TimePoint hi, int percent = 40) {
  std::uniform_int_distribution<int> coin(0, 99);
  std::vector<Interval> parts;
  for (TimePoint t = lo; t <= hi; ++t) {
    if (coin(rng) < percent) parts.push_back(Interval::point(t));
  }
  return IntervalSet::of(std::move(parts));
}

// Bounded core plus optional infinite tails on either side.
inline IntervalSet random_tailed_set(std::mt19937_64& rng, TimePoint lo, TimePoint hi, int percent = 40) {
  IntervalSet out = random_bounded_set(rng, lo, hi, percent);
  std::uniform_int_distribution<int> coin(0, 3);
  if (coin(rng) == 0) out = set_union(out, IntervalSet(Interval::at_most(lo - 2)));
  if (coin(rng) == 0) out = set_union(out, IntervalSet(Interval::at_least(hi + 2)));
  return out;
}

inline Interval random_delta(std::mt19937_64& rng, TimePoint max_width, bool allow_inf = false) {
  std::uniform_int_distribution<TimePoint> lo_dist(0, max_width);
  TimePoint a = lo_dist(rng);
  if (allow_inf && std::uniform_int_distribution<int>(0, 9)(rng) == 0) {
    return Interval::from_bounds(TimeBound::finite(a), TimeBound::pos_inf());
  }
  std::uniform_int_distribution<TimePoint> hi_dist(a, max_width);
  return Interval::closed(a, hi_dist(rng));
}

inline MetricAtom random_ground_atom(std::mt19937_64& rng, const std::vector<std::string>& preds,
                                     int depth, TimePoint delta_max, bool allow_inf = false) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(preds.size()) - 1);
  auto leaf = [&] { return MetricAtom::rel(RelationalAtom{preds[pick(rng)], {}}); };
  if (depth <= 0) return leaf();
  switch (std::uniform_int_distribution<int>(0, 8)(rng)) {
    case 0:
    case 1:
      return leaf();
    case 2:
      return MetricAtom::diamond_minus(random_delta(rng, delta_max, allow_inf),
                                       random_ground_atom(rng, preds, depth - 1, delta_max, allow_inf));
    case 3:
      return MetricAtom::diamond_plus(random_delta(rng, delta_max, allow_inf),
                                      random_ground_atom(rng, preds, depth - 1, delta_max, allow_inf));
    case 4:
      return MetricAtom::box_minus(random_delta(rng, delta_max, allow_inf),
                                   random_ground_atom(rng, preds, depth - 1, delta_max, allow_inf));
    case 5:
      return MetricAtom::box_plus(random_delta(rng, delta_max, allow_inf),
                                  random_ground_atom(rng, preds, depth - 1, delta_max, allow_inf));
    case 6:
      return MetricAtom::since(random_ground_atom(rng, preds, depth - 1, delta_max, allow_inf),
                               random_delta(rng, delta_max, allow_inf),
                               random_ground_atom(rng, preds, depth - 1, delta_max, allow_inf));
    default:
      return MetricAtom::until(random_ground_atom(rng, preds, depth - 1, delta_max, allow_inf),
                               random_delta(rng, delta_max, allow_inf),
                               random_ground_atom(rng, preds, depth - 1, delta_max, allow_inf));
  }
}

inline MetricAtom random_head_atom(std::mt19937_64& rng, const std::vector<std::string>& preds,
                                   int depth, TimePoint delta_max) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(preds.size()) - 1);
  MetricAtom out = MetricAtom::rel(RelationalAtom{preds[pick(rng)], {}});
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < depth; ++i) {
    if (coin(rng)) break;
    out = coin(rng) ? MetricAtom::box_minus(random_delta(rng, delta_max), std::move(out))
                    : MetricAtom::box_plus(random_delta(rng, delta_max), std::move(out));
  }
  return out;
}

inline Interpretation random_interpretation(std::mt19937_64& rng, const std::vector<GroundAtom>& atoms,
                                            TimePoint lo, TimePoint hi, int percent = 40) {
  Interpretation out;
  for (const GroundAtom& atom : atoms) {
    out.set(atom, random_bounded_set(rng, lo, hi, percent));
  }
  return out;
}

inline ThreeValuedInterpretation random_pair(std::mt19937_64& rng, const std::vector<GroundAtom>& atoms,
                                             TimePoint lo, TimePoint hi) {
  Interpretation a = random_interpretation(rng, atoms, lo, hi);
  Interpretation b = random_interpretation(rng, atoms, lo, hi);
  return ThreeValuedInterpretation{interp_intersect(a, b), interp_union(a, b)};
}

inline std::vector<GroundAtom> nullary_atoms(const std::vector<std::string>& preds) {
  std::vector<GroundAtom> out;
  for (const std::string& p : preds) out.push_back(GroundAtom{p, {}});
  return out;
}

// All translation-invariant consistent pairs over the given nullary atoms:
// every atom is false, undef, or true on the whole line.
inline std::vector<ThreeValuedInterpretation> invariant_pairs(const std::vector<GroundAtom>& atoms) {
  std::vector<ThreeValuedInterpretation> out;
  std::size_t n = atoms.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    ThreeValuedInterpretation j;
    std::size_t c = code;
    for (const GroundAtom& atom : atoms) {
      switch (c % 3) {
        case 1:
          j.hi.set(atom, IntervalSet::full());
          break;
        case 2:
          j.lo.set(atom, IntervalSet::full());
          j.hi.set(atom, IntervalSet::full());
          break;
        default:
          break;
      }
      c /= 3;
    }
    out.push_back(std::move(j));
  }
  return out;
}

// ---------- small finite lattices for the generic fixpoint layer ----------

// Powerset of {0, .., n-1} as a bitmask lattice.
struct BitsetLattice {
  using Element = unsigned;
  unsigned universe;

  explicit BitsetLattice(int n) : universe((1u << n) - 1u) {}

  Element bottom() const { return 0; }
  Element top() const { return universe; }
  bool leq(Element a, Element b) const { return (a & ~b) == 0; }
  bool equal(Element a, Element b) const { return a == b; }
  Element join(Element a, Element b) const { return a | b; }
  Element meet(Element a, Element b) const { return a & b; }

  std::vector<Element> all() const {
    std::vector<Element> out;
    for (unsigned x = 0; x <= universe; ++x) out.push_back(x);
    return out;
  }
};

inline ReasoningInstance instance_of(const std::string& program_text, const std::string& dataset_text = "") {
  return make_instance(parse_program(program_text), parse_dataset(dataset_text));
}

inline IntervalSet set_of_points(std::initializer_list<TimePoint> points) {
  std::vector<Interval> parts;
  for (TimePoint t : points) parts.push_back(Interval::point(t));
  return IntervalSet::of(std::move(parts));
}

}  // namespace testsupport
