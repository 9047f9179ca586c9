#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mtlog/aft.hpp"
#include "mtlog/consequence.hpp"
#include "mtlog/interpretation.hpp"

namespace mtlog {

struct EngineConfig {
  enum class Mode { Symbolic, Bounded };
  Mode mode = Mode::Symbolic;
  TimePoint window_lo = 0;
  TimePoint window_hi = 0;
  int max_iters = 10'000;
  /// Upper bound on brute-force candidate spaces (2^cells and subset scans).
  std::uint64_t enumeration_budget = 1'000'000;
  /// When set, fixpoint iterations abort with NonTermination as soon as any
  /// finite endpoint of an iterate leaves this range; used to detect
  /// derivations marching off to infinity early.
  std::optional<std::pair<TimePoint, TimePoint>> support_horizon;

  static EngineConfig bounded(TimePoint lo, TimePoint hi) {
    EngineConfig cfg;
    cfg.mode = Mode::Bounded;
    cfg.window_lo = lo;
    cfg.window_hi = hi;
    return cfg;
  }
};

struct ModelReport {
  enum class Kind { KripkeKleene, WellFounded, Supported, Stable3, Stable2, Ht, StableHt };
  Kind kind;
  ThreeValuedInterpretation value;
  int iterations = 0;
  bool exact = false;

  std::string serialize() const;
};

std::string to_string(ModelReport::Kind kind);

/// The lattice of interpretations over a fixed Herbrand base: pointwise
/// inclusion, atom-wise union/meet, top maps every atom to the full line.
struct InterpretationLattice {
  using Element = Interpretation;
  std::vector<GroundAtom> herbrand;

  Interpretation bottom() const { return {}; }
  Interpretation top() const;
  bool leq(const Interpretation& a, const Interpretation& b) const { return interp_subset(a, b); }
  bool equal(const Interpretation& a, const Interpretation& b) const { return a == b; }
  Interpretation join(const Interpretation& a, const Interpretation& b) const { return interp_union(a, b); }
  Interpretation meet(const Interpretation& a, const Interpretation& b) const { return interp_intersect(a, b); }
};

/// The three-valued consequence operator packaged for the generic fixpoint
/// machinery, with optional horizon checking from cfg.
aft::Approximator<InterpretationLattice> make_approximator(const ReasoningInstance& inst,
                                                           const EngineConfig& cfg);

ModelReport kripke_kleene_model(const ReasoningInstance& inst, const EngineConfig& cfg);
ModelReport well_founded_model(const ReasoningInstance& inst, const EngineConfig& cfg);

/// Fixpoint check: a_op(J) == J.
bool is_supported_model(const ReasoningInstance& inst, const ThreeValuedInterpretation& j,
                        const EngineConfig& cfg);

/// Stable-fixpoint check: J equals its own stable revision. The internal
/// iteration stops early (reporting false) as soon as an iterate exceeds the
/// corresponding bound of J, since lfp iterates only grow.
bool is_stable3(const ReasoningInstance& inst, const ThreeValuedInterpretation& j, const EngineConfig& cfg);
/// Two-valued stability: I models dataset and program, and (I,I) is stable.
bool is_stable2(const ReasoningInstance& inst, const Interpretation& i, const EngineConfig& cfg);

struct EnumerationResult {
  std::vector<Interpretation> models;  // sorted by dump
  /// True when no stable model can extend beyond the effective window (the
  /// well-founded upper bound fits inside it).
  bool complete = false;
  TimePoint window_lo = 0;
  TimePoint window_hi = 0;
};

/// Brute-force enumeration of two-valued stable models that are false
/// outside the window; every candidate is verified exactly over the full
/// timeline. Widens the window when the well-founded upper bound has finite
/// support just beyond it and the budget allows.
EnumerationResult enumerate_stable2_bounded(const ReasoningInstance& inst, const EngineConfig& cfg);

/// Here-and-there model check of a consistent pair (prior-work semantics).
bool is_ht_model(const ReasoningInstance& inst, const ThreeValuedInterpretation& j);

/// Stable HT-model check: (I,I) is an HT-model and no proper subset of I is
/// an HT-companion of I. Requires finite support within the budget.
bool is_stable_ht(const ReasoningInstance& inst, const Interpretation& i, const EngineConfig& cfg);

/// Property check behind the HT-to-stable bridge: an HT-model's lower bound
/// absorbs one application of the first operator component.
bool check_ht_prefixpoint(const ReasoningInstance& inst, const ThreeValuedInterpretation& j);

struct DifferentialResult {
  bool agree = true;
  std::vector<Interpretation> stable_ht;
  std::vector<Interpretation> stable_aft;
  std::string mismatch;  // dump of the first disagreeing candidate
};

/// Brute-forces both stable-model characterizations over the same window
/// candidates and compares them.
DifferentialResult differential_stable_check(const ReasoningInstance& inst, const EngineConfig& cfg);

struct RandomInstanceOptions {
  int max_predicates = 3;  // nullary
  int max_rules = 3;
  int max_literals = 3;
  int max_depth = 2;
  TimePoint delta_max = 2;
  TimePoint window_lo = 0;
  TimePoint window_hi = 3;
};

struct GeneratedInstance {
  Program program;
  Dataset dataset;
  ReasoningInstance instance;
};

/// Seeded random instance; every rule carries at least one positive literal
/// so bodies cannot fire on the whole timeline out of nothing.
GeneratedInstance random_instance(std::mt19937_64& rng, const RandomInstanceOptions& opts);

struct HarnessReport {
  std::uint64_t seed = 0;
  int instances = 0;
  int discrepancies = 0;
  /// Stable models found across all instances (agreeing on both sides);
  /// shows the run was not vacuous.
  int stable_models = 0;
  std::string detail;  // replayable description of any discrepancy

  std::string serialize() const;
};

/// Runs the differential check over n seeded random instances.
HarnessReport run_differential_harness(int n, std::uint64_t seed, const EngineConfig& cfg);

}  // namespace mtlog
