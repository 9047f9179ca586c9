#include "mtlog/engines.hpp"

#include <algorithm>
#include <cassert>
#include <memory>

#include "mtlog/errors.hpp"
#include "mtlog/eval.hpp"

namespace mtlog {
namespace {

using Lat = InterpretationLattice;
using APair = aft::Pair<Lat>;

void require_bounded(const EngineConfig& cfg, const char* what) {
  if (cfg.mode != EngineConfig::Mode::Bounded) {
    throw Error(std::string(what) + " requires a bounded window");
  }
}

bool endpoints_within(const IntervalSet& s, TimePoint lo, TimePoint hi) {
  auto lo_end = s.min_finite_endpoint();
  auto hi_end = s.max_finite_endpoint();
  if (lo_end && *lo_end < lo) return false;
  if (hi_end && *hi_end > hi) return false;
  return true;
}

void check_horizon(const Interpretation& i, const std::optional<std::pair<TimePoint, TimePoint>>& horizon) {
  if (!horizon) return;
  for (const auto& [atom, extent] : i.extents()) {
    if (!endpoints_within(extent, horizon->first, horizon->second)) {
      throw NonTermination("derived support for " + atom.to_string() + " escaped the horizon [" +
                           std::to_string(horizon->first) + "," + std::to_string(horizon->second) + "]");
    }
  }
}

std::optional<GroundAtom> head_core(const MetricAtom& head) {
  const MetricAtom* m = &head;
  while (m->is_unary_temporal()) m = &m->child();
  if (m->kind() == MetricAtom::Kind::Rel) return to_ground(m->atom());
  return std::nullopt;
}

// Names the atoms whose extents changed between the last two iterates and the
// rules that can derive them.
std::string growth_diagnostics(const ReasoningInstance& inst, const ThreeValuedInterpretation& prev,
                               const ThreeValuedInterpretation& cur) {
  std::vector<GroundAtom> growing;
  for (const GroundAtom& atom : inst.herbrand) {
    if (!(prev.lo.get(atom) == cur.lo.get(atom)) || !(prev.hi.get(atom) == cur.hi.get(atom))) {
      growing.push_back(atom);
    }
  }
  if (growing.empty()) return "";
  std::string out = "; still changing:";
  for (const GroundAtom& atom : growing) out += " " + atom.to_string();
  std::string rules;
  for (const Rule& r : inst.ground_rules) {
    auto core = head_core(r.head);
    if (!core) continue;
    if (std::find(growing.begin(), growing.end(), *core) != growing.end()) {
      rules += (rules.empty() ? "" : " | ") + r.to_string();
    }
  }
  if (!rules.empty()) out += "; producing rules: " + rules;
  return out;
}

struct IterationTrace {
  ThreeValuedInterpretation prev;
  ThreeValuedInterpretation cur;
  bool seen = false;
};

}  // namespace

Interpretation InterpretationLattice::top() const {
  Interpretation out;
  for (const GroundAtom& atom : herbrand) out.set(atom, IntervalSet::full());
  return out;
}

aft::Approximator<Lat> make_approximator(const ReasoningInstance& inst, const EngineConfig& cfg) {
  const ReasoningInstance* ip = &inst;
  auto horizon = cfg.support_horizon;
  auto a1 = [ip, horizon](const Interpretation& lo, const Interpretation& hi) {
    Interpretation out = a1_op(*ip, ThreeValuedInterpretation{lo, hi});
    check_horizon(out, horizon);
    return out;
  };
  auto a2 = [ip, horizon](const Interpretation& lo, const Interpretation& hi) {
    Interpretation out = a2_op(*ip, ThreeValuedInterpretation{lo, hi});
    check_horizon(out, horizon);
    return out;
  };
  return aft::Approximator<Lat>{a1, a2};
}

namespace {

// Wraps the approximator so the last two input pairs are remembered for
// diagnostics when the iteration is cut off.
aft::Approximator<Lat> traced(const aft::Approximator<Lat>& a, std::shared_ptr<IterationTrace> trace) {
  auto remember = [trace](const Interpretation& lo, const Interpretation& hi) {
    ThreeValuedInterpretation in{lo, hi};
    if (trace->seen) trace->prev = trace->cur;
    trace->cur = std::move(in);
    trace->seen = true;
  };
  auto a1 = [a, remember](const Interpretation& lo, const Interpretation& hi) {
    remember(lo, hi);
    return a.a1(lo, hi);
  };
  auto a2 = [a](const Interpretation& lo, const Interpretation& hi) { return a.a2(lo, hi); };
  return aft::Approximator<Lat>{a1, a2};
}

}  // namespace

ModelReport kripke_kleene_model(const ReasoningInstance& inst, const EngineConfig& cfg) {
  Lat lat{inst.herbrand};
  auto trace = std::make_shared<IterationTrace>();
  aft::Approximator<Lat> a = traced(make_approximator(inst, cfg), trace);
  int iters = 0;
  try {
    APair p = aft::kripke_kleene(lat, a, cfg.max_iters, &iters);
    ThreeValuedInterpretation value{p.lo, p.hi};
    return ModelReport{ModelReport::Kind::KripkeKleene, value, iters, value.exact()};
  } catch (const NonTermination& e) {
    throw NonTermination(std::string(e.what()) +
                         (trace->seen ? growth_diagnostics(inst, trace->prev, trace->cur) : ""));
  }
}

ModelReport well_founded_model(const ReasoningInstance& inst, const EngineConfig& cfg) {
  Lat lat{inst.herbrand};
  auto trace = std::make_shared<IterationTrace>();
  aft::Approximator<Lat> a = traced(make_approximator(inst, cfg), trace);
  int iters = 0;
  try {
    APair p = aft::well_founded(lat, a, cfg.max_iters, &iters);
    ThreeValuedInterpretation value{p.lo, p.hi};
    return ModelReport{ModelReport::Kind::WellFounded, value, iters, value.exact()};
  } catch (const NonTermination& e) {
    throw NonTermination(std::string(e.what()) +
                         (trace->seen ? growth_diagnostics(inst, trace->prev, trace->cur) : ""));
  }
}

bool is_supported_model(const ReasoningInstance& inst, const ThreeValuedInterpretation& j,
                        const EngineConfig& cfg) {
  (void)cfg;
  return a_op(inst, j) == j;
}

bool is_stable3(const ReasoningInstance& inst, const ThreeValuedInterpretation& j, const EngineConfig& cfg) {
  if (!j.consistent()) return false;
  // Lower bound: lfp of A1(., j.hi) from bottom must reproduce j.lo. Iterates
  // only grow, so exceeding j.lo decides the check negatively at once.
  Interpretation x;
  for (int i = 0;; ++i) {
    if (i >= cfg.max_iters) {
      throw NonTermination("stable check: lower revision did not stabilize");
    }
    Interpretation next = a1_op(inst, ThreeValuedInterpretation{x, j.hi});
    if (!interp_subset(next, j.lo)) return false;
    if (next == x) break;
    x = std::move(next);
  }
  if (!(x == j.lo)) return false;
  // Upper bound: lfp of A2(j.lo, .) from bottom must reproduce j.hi.
  Interpretation y;
  for (int i = 0;; ++i) {
    if (i >= cfg.max_iters) {
      throw NonTermination("stable check: upper revision did not stabilize");
    }
    Interpretation next = a2_op(inst, ThreeValuedInterpretation{j.lo, y});
    if (!interp_subset(next, j.hi)) return false;
    if (next == y) break;
    y = std::move(next);
  }
  return y == j.hi;
}

bool is_stable2(const ReasoningInstance& inst, const Interpretation& i, const EngineConfig& cfg) {
  if (!is_model2(i, inst.dataset, inst.ground_rules)) return false;
  return is_stable3(inst, exact_pair(i), cfg);
}

namespace {

// Finite candidate space: one boolean cell per (herbrand atom, window point).
struct CellSpace {
  std::vector<GroundAtom> atoms;
  TimePoint lo = 0;
  TimePoint hi = 0;

  std::size_t width() const { return static_cast<std::size_t>(hi - lo + 1); }
  std::size_t cell_count() const { return atoms.size() * width(); }

  Interpretation from_mask(std::uint64_t mask) const {
    Interpretation out;
    std::size_t bit = 0;
    for (const GroundAtom& atom : atoms) {
      std::vector<Interval> parts;
      for (TimePoint t = lo; t <= hi; ++t, ++bit) {
        if (mask & (std::uint64_t{1} << bit)) parts.push_back(Interval::point(t));
      }
      if (!parts.empty()) out.set(atom, IntervalSet::of(std::move(parts)));
    }
    return out;
  }
};

CellSpace cell_space(const ReasoningInstance& inst, TimePoint lo, TimePoint hi,
                     std::uint64_t budget, const char* what) {
  CellSpace cells{inst.herbrand, lo, hi};
  std::size_t n = cells.cell_count();
  if (n >= 63 || (std::uint64_t{1} << n) > budget) {
    throw BudgetExceeded(std::string(what) + ": 2^" + std::to_string(n) +
                         " candidates exceed the enumeration budget");
  }
  return cells;
}

void sort_by_dump(std::vector<Interpretation>& models) {
  std::sort(models.begin(), models.end(),
            [](const Interpretation& a, const Interpretation& b) { return a.dump() < b.dump(); });
}

}  // namespace

EnumerationResult enumerate_stable2_bounded(const ReasoningInstance& inst, const EngineConfig& cfg) {
  require_bounded(cfg, "stable-model enumeration");
  EnumerationResult out;
  out.window_lo = cfg.window_lo;
  out.window_hi = cfg.window_hi;

  // The well-founded upper bound encloses every stable model, so a window
  // containing it makes the enumeration complete; finite support just beyond
  // the window triggers widening instead.
  try {
    EngineConfig probe = cfg;
    probe.support_horizon = {cfg.window_lo - 64, cfg.window_hi + 64};
    ModelReport wf = well_founded_model(inst, probe);
    bool finite = true;
    TimePoint need_lo = cfg.window_lo;
    TimePoint need_hi = cfg.window_hi;
    for (const auto& [atom, extent] : wf.value.hi.extents()) {
      for (const Interval& part : extent.parts()) {
        if (!part.lo().is_finite() || !part.hi().is_finite()) {
          finite = false;
          break;
        }
        need_lo = std::min(need_lo, part.lo().value());
        need_hi = std::max(need_hi, part.hi().value());
      }
      if (!finite) break;
    }
    if (finite) {
      std::size_t n = inst.herbrand.size() * static_cast<std::size_t>(need_hi - need_lo + 1);
      if (need_lo >= cfg.window_lo && need_hi <= cfg.window_hi) {
        out.complete = true;
      } else if (n < 63 && (std::uint64_t{1} << n) <= cfg.enumeration_budget) {
        out.window_lo = need_lo;
        out.window_hi = need_hi;
        out.complete = true;
      }
    }
  } catch (const NonTermination&) {
    // Unbounded derivations: report the window as possibly incomplete.
  }

  CellSpace cells = cell_space(inst, out.window_lo, out.window_hi, cfg.enumeration_budget,
                               "stable-model enumeration");
  std::uint64_t total = std::uint64_t{1} << cells.cell_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Interpretation candidate = cells.from_mask(mask);
    if (is_stable2(inst, candidate, cfg)) out.models.push_back(std::move(candidate));
  }
  sort_by_dump(out.models);
  return out;
}

bool is_ht_model(const ReasoningInstance& inst, const ThreeValuedInterpretation& j) {
  for (const Fact& f : inst.dataset.facts) {
    if (!is_subset(IntervalSet(f.interval), j.lo.get(f.atom))) return false;
  }
  for (const Rule& r : inst.ground_rules) {
    // Condition 1: positives under lo, negated atoms false under hi.
    IntervalSet fire1 = IntervalSet::full();
    for (const MetricAtom& m : r.positive) fire1 = set_intersect(fire1, eval2_set(m, j.lo));
    for (const MetricAtom& m : r.negative) {
      fire1 = set_intersect(fire1, set_complement(eval2_set(m, j.hi)));
    }
    if (!is_subset(fire1, eval2_set(r.head, j.lo))) return false;
    // Condition 2: both polarities under hi.
    IntervalSet fire2 = IntervalSet::full();
    for (const MetricAtom& m : r.positive) fire2 = set_intersect(fire2, eval2_set(m, j.hi));
    for (const MetricAtom& m : r.negative) {
      fire2 = set_intersect(fire2, set_complement(eval2_set(m, j.hi)));
    }
    if (!is_subset(fire2, eval2_set(r.head, j.hi))) return false;
  }
  return true;
}

bool is_stable_ht(const ReasoningInstance& inst, const Interpretation& i, const EngineConfig& cfg) {
  require_bounded(cfg, "stable-HT check");
  if (!is_ht_model(inst, exact_pair(i))) return false;

  // Companions are consistent with (., i), hence subsets of i; i is stable
  // iff no proper subset of its true cells is an HT-companion.
  std::vector<std::pair<GroundAtom, TimePoint>> cells;
  for (const auto& [atom, extent] : i.extents()) {
    for (const Interval& part : extent.parts()) {
      if (!part.lo().is_finite() || !part.hi().is_finite()) {
        throw BudgetExceeded("stable-HT check needs a finitely supported interpretation");
      }
      for (TimePoint t = part.lo().value(); t <= part.hi().value(); ++t) cells.emplace_back(atom, t);
    }
  }
  std::size_t n = cells.size();
  if (n >= 63 || (std::uint64_t{1} << n) > cfg.enumeration_budget) {
    throw BudgetExceeded("stable-HT check: companion space exceeds the enumeration budget");
  }
  std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    Interpretation companion;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask & (std::uint64_t{1} << b)) {
        companion.add(cells[b].first, IntervalSet(Interval::point(cells[b].second)));
      }
    }
    if (is_ht_model(inst, ThreeValuedInterpretation{std::move(companion), i})) return false;
  }
  return true;
}

bool check_ht_prefixpoint(const ReasoningInstance& inst, const ThreeValuedInterpretation& j) {
  if (!is_ht_model(inst, j)) return true;
  return interp_subset(a1_op(inst, j), j.lo);
}

DifferentialResult differential_stable_check(const ReasoningInstance& inst, const EngineConfig& cfg) {
  require_bounded(cfg, "differential check");
  CellSpace cells = cell_space(inst, cfg.window_lo, cfg.window_hi, cfg.enumeration_budget,
                               "differential check");
  DifferentialResult out;
  std::uint64_t total = std::uint64_t{1} << cells.cell_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Interpretation candidate = cells.from_mask(mask);
    bool aft_stable = is_stable2(inst, candidate, cfg);
    bool ht_stable = is_stable_ht(inst, candidate, cfg);
    if (aft_stable) out.stable_aft.push_back(candidate);
    if (ht_stable) out.stable_ht.push_back(candidate);
    if (aft_stable != ht_stable && out.agree) {
      out.agree = false;
      out.mismatch = "candidate:\n" + (candidate.empty() ? std::string("<empty>\n") : candidate.dump()) +
                     "aft-stable: " + (aft_stable ? "true" : "false") +
                     ", ht-stable: " + (ht_stable ? "true" : "false") + "\n";
    }
  }
  sort_by_dump(out.stable_aft);
  sort_by_dump(out.stable_ht);
  return out;
}

namespace {

Interval random_delta(std::mt19937_64& rng, TimePoint delta_max) {
  std::uniform_int_distribution<TimePoint> lo_dist(0, delta_max);
  TimePoint a = lo_dist(rng);
  std::uniform_int_distribution<TimePoint> hi_dist(a, delta_max);
  return Interval::closed(a, hi_dist(rng));
}

MetricAtom random_atom(std::mt19937_64& rng, const std::vector<std::string>& preds, int depth,
                       TimePoint delta_max) {
  std::uniform_int_distribution<int> pred_dist(0, static_cast<int>(preds.size()) - 1);
  auto rel = [&] { return MetricAtom::rel(RelationalAtom{preds[pred_dist(rng)], {}}); };
  if (depth <= 0) return rel();
  std::uniform_int_distribution<int> kind_dist(0, 8);
  switch (kind_dist(rng)) {
    case 0:
    case 1:
    case 2:
      return rel();
    case 3:
      return MetricAtom::diamond_minus(random_delta(rng, delta_max),
                                       random_atom(rng, preds, depth - 1, delta_max));
    case 4:
      return MetricAtom::diamond_plus(random_delta(rng, delta_max),
                                      random_atom(rng, preds, depth - 1, delta_max));
    case 5:
      return MetricAtom::box_minus(random_delta(rng, delta_max),
                                   random_atom(rng, preds, depth - 1, delta_max));
    case 6:
      return MetricAtom::box_plus(random_delta(rng, delta_max),
                                  random_atom(rng, preds, depth - 1, delta_max));
    case 7:
      return MetricAtom::since(random_atom(rng, preds, depth - 1, delta_max),
                               random_delta(rng, delta_max),
                               random_atom(rng, preds, depth - 1, delta_max));
    default:
      return MetricAtom::until(random_atom(rng, preds, depth - 1, delta_max),
                               random_delta(rng, delta_max),
                               random_atom(rng, preds, depth - 1, delta_max));
  }
}

}  // namespace

GeneratedInstance random_instance(std::mt19937_64& rng, const RandomInstanceOptions& opts) {
  static const std::vector<std::string> kNames = {"P", "Q", "R"};
  std::uniform_int_distribution<int> npred_dist(1, opts.max_predicates);
  int npreds = npred_dist(rng);
  std::vector<std::string> preds(kNames.begin(), kNames.begin() + npreds);

  GeneratedInstance out;
  std::uniform_int_distribution<int> coin(0, 1);
  for (const std::string& p : preds) {
    if (coin(rng)) {
      std::uniform_int_distribution<TimePoint> a_dist(opts.window_lo, opts.window_hi);
      TimePoint a = a_dist(rng);
      std::uniform_int_distribution<TimePoint> b_dist(a, opts.window_hi);
      out.dataset.facts.push_back(Fact{GroundAtom{p, {}}, Interval::closed(a, b_dist(rng))});
    }
  }

  std::uniform_int_distribution<int> nrule_dist(1, opts.max_rules);
  std::uniform_int_distribution<int> pred_dist(0, npreds - 1);
  std::uniform_int_distribution<int> head_shape(0, 3);
  std::uniform_int_distribution<int> nlit_dist(1, opts.max_literals);
  std::uniform_int_distribution<int> percent(0, 99);
  int nrules = nrule_dist(rng);
  for (int r = 0; r < nrules; ++r) {
    MetricAtom head = MetricAtom::rel(RelationalAtom{preds[pred_dist(rng)], {}});
    if (head_shape(rng) == 0) {
      head = coin(rng) ? MetricAtom::box_minus(random_delta(rng, opts.delta_max), std::move(head))
                       : MetricAtom::box_plus(random_delta(rng, opts.delta_max), std::move(head));
    }
    Rule rule{std::move(head), {}, {}};
    int nlits = nlit_dist(rng);
    for (int l = 0; l < nlits; ++l) {
      MetricAtom body = random_atom(rng, preds, opts.max_depth, opts.delta_max);
      // The first literal stays positive so the rule cannot fire on the whole
      // timeline out of an empty interpretation.
      bool negated = l > 0 && percent(rng) < 45;
      (negated ? rule.negative : rule.positive).push_back(std::move(body));
    }
    out.program.rules.push_back(std::move(rule));
  }
  out.instance = make_instance(out.program, out.dataset);
  return out;
}

HarnessReport run_differential_harness(int n, std::uint64_t seed, const EngineConfig& cfg) {
  std::mt19937_64 rng(seed);
  RandomInstanceOptions opts;
  opts.window_lo = cfg.window_lo;
  opts.window_hi = cfg.window_hi;
  HarnessReport report;
  report.seed = seed;
  for (int i = 0; i < n; ++i) {
    GeneratedInstance gen = random_instance(rng, opts);
    DifferentialResult result = differential_stable_check(gen.instance, cfg);
    ++report.instances;
    report.stable_models += static_cast<int>(result.stable_aft.size());
    if (!result.agree) {
      ++report.discrepancies;
      if (report.detail.size() < 8192) {
        report.detail += "instance " + std::to_string(i) + ":\n" + gen.program.to_string() +
                         gen.dataset.to_string() + result.mismatch;
      }
    }
  }
  return report;
}

std::string to_string(ModelReport::Kind kind) {
  switch (kind) {
    case ModelReport::Kind::KripkeKleene: return "kripke-kleene";
    case ModelReport::Kind::WellFounded: return "well-founded";
    case ModelReport::Kind::Supported: return "supported";
    case ModelReport::Kind::Stable3: return "stable3";
    case ModelReport::Kind::Stable2: return "stable2";
    case ModelReport::Kind::Ht: return "ht";
    case ModelReport::Kind::StableHt: return "stable-ht";
  }
  return "?";
}

std::string ModelReport::serialize() const {
  std::string out = "kind: " + mtlog::to_string(kind) + "\n";
  out += "iterations: " + std::to_string(iterations) + "\n";
  out += std::string("exact: ") + (exact ? "true" : "false") + "\n";
  out += value.dump();
  return out;
}

std::string HarnessReport::serialize() const {
  std::string out = "seed: " + std::to_string(seed) + "\n";
  out += "instances: " + std::to_string(instances) + "\n";
  out += "discrepancies: " + std::to_string(discrepancies) + "\n";
  out += "stable-models: " + std::to_string(stable_models) + "\n";
  out += detail;
  return out;
}

}  // namespace mtlog
