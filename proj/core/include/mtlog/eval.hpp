#pragma once

#include <set>
#include <utility>
#include <vector>

#include "mtlog/ast.hpp"
#include "mtlog/interpretation.hpp"

namespace mtlog {

/// Pointwise two-valued evaluation of a ground metric atom by direct
/// quantification. Quantifier ranges with infinite ends are clipped to a
/// horizon beyond which every extension in the interpretation is constant,
/// with one representative probe per tail, so the result is exact on the
/// full timeline.
bool eval2_at(const MetricAtom& m, const Interpretation& i, TimePoint t);

/// Conjunction of the rule's literals at t, negated atoms flipped.
bool eval2_body_at(const Rule& rule, const Interpretation& i, TimePoint t);

/// Three-valued value of a ground metric atom under a consistent pair.
Truth3 eval3_at(const MetricAtom& m, const ThreeValuedInterpretation& j, TimePoint t);
Truth3 eval3_literal_at(const MetricAtom& m, bool negated, const ThreeValuedInterpretation& j, TimePoint t);
Truth3 eval3_body_at(const Rule& rule, const ThreeValuedInterpretation& j, TimePoint t);

/// Symbolic evaluation: the exact set of timepoints where the atom holds.
IntervalSet eval2_set(const MetricAtom& m, const Interpretation& i);

/// Exact set of timepoints where the whole body holds.
IntervalSet eval2_body_set(const Rule& rule, const Interpretation& i);

/// Component-wise symbolic body evaluation under a consistent pair:
/// where the body is true, and where it is not false. Positive literals read
/// lo/hi respectively; negated literals read the complement of the opposite
/// component.
struct BodySets {
  IntervalSet true_set;
  IntervalSet notfalse_set;
};
BodySets eval3_body_sets(const Rule& rule, const ThreeValuedInterpretation& j);

/// The set of (atom, timepoint) obligations induced by deriving the ground
/// head atom at time t. Throws on infinite head intervals, whose unfolding
/// would be infinite.
std::set<std::pair<GroundAtom, TimePoint>> head_points(const MetricAtom& head, TimePoint t);

/// Symbolic transpose of head_points: if a rule body holds exactly on s,
/// the extension forced onto the head's relational core. Empty for top.
std::vector<std::pair<GroundAtom, IntervalSet>> head_apply(const MetricAtom& head, const IntervalSet& s);

/// Two-valued model check (dataset satisfaction plus body <= head for every
/// ground rule), performed symbolically over the full timeline.
bool is_model2(const Interpretation& i, const Dataset& dataset, const std::vector<Rule>& ground_rules);

/// Three-valued model check; lo must satisfy the dataset.
bool is_model3(const ThreeValuedInterpretation& j, const Dataset& dataset, const std::vector<Rule>& ground_rules);

}  // namespace mtlog
