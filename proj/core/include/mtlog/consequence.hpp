#pragma once

#include <vector>

#include "mtlog/ast.hpp"
#include "mtlog/eval.hpp"
#include "mtlog/ground.hpp"
#include "mtlog/interpretation.hpp"

namespace mtlog {

/// A dataset together with its ground program and the finite universe of
/// ground atoms the operators range over.
struct ReasoningInstance {
  Dataset dataset;
  std::vector<Rule> ground_rules;
  std::vector<GroundAtom> herbrand;
};

/// Grounds the program over the active constants and builds the Herbrand
/// base of every atom constructible from the mentioned predicates.
ReasoningInstance make_instance(const Program& program, const Dataset& dataset);

/// Immediate consequence operator: dataset facts plus one symbolic firing
/// pass of every ground rule.
Interpretation t_op(const ReasoningInstance& inst, const Interpretation& i);

/// Three-valued immediate consequence operator; the first component fires
/// where bodies are true, the second where they are not false.
ThreeValuedInterpretation a_op(const ReasoningInstance& inst, const ThreeValuedInterpretation& j);
Interpretation a1_op(const ReasoningInstance& inst, const ThreeValuedInterpretation& j);
Interpretation a2_op(const ReasoningInstance& inst, const ThreeValuedInterpretation& j);

}  // namespace mtlog
