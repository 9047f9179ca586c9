#include "mtlog/consequence.hpp"

#include <map>
#include <set>

#include "mtlog/errors.hpp"

namespace mtlog {
namespace {

void collect_predicates(const MetricAtom& m, std::map<std::string, std::size_t>& arity) {
  switch (m.kind()) {
    case MetricAtom::Kind::Rel: {
      auto [it, inserted] = arity.emplace(m.atom().predicate, m.atom().args.size());
      if (!inserted && it->second != m.atom().args.size()) {
        throw Error("predicate '" + m.atom().predicate + "' used with inconsistent arities");
      }
      return;
    }
    case MetricAtom::Kind::Since:
    case MetricAtom::Kind::Until:
      collect_predicates(m.lhs(), arity);
      collect_predicates(m.rhs(), arity);
      return;
    case MetricAtom::Kind::Top:
    case MetricAtom::Kind::Bottom:
      return;
    default:
      collect_predicates(m.child(), arity);
  }
}

}  // namespace

ReasoningInstance make_instance(const Program& program, const Dataset& dataset) {
  ReasoningInstance inst;
  inst.dataset = dataset;

  std::set<std::string> consts = active_constants(program, dataset);
  inst.ground_rules = ground(program, consts);

  std::map<std::string, std::size_t> arity;
  for (const Rule& r : program.rules) {
    collect_predicates(r.head, arity);
    for (const MetricAtom& m : r.positive) collect_predicates(m, arity);
    for (const MetricAtom& m : r.negative) collect_predicates(m, arity);
  }
  for (const Fact& f : dataset.facts) {
    auto [it, inserted] = arity.emplace(f.atom.predicate, f.atom.args.size());
    if (!inserted && it->second != f.atom.args.size()) {
      throw Error("predicate '" + f.atom.predicate + "' used with inconsistent arities");
    }
  }

  std::vector<std::string> pool(consts.begin(), consts.end());
  std::set<GroundAtom> atoms;
  for (const auto& [pred, k] : arity) {
    if (k == 0) {
      atoms.insert(GroundAtom{pred, {}});
      continue;
    }
    if (pool.empty()) continue;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      GroundAtom atom{pred, {}};
      atom.args.reserve(k);
      for (std::size_t i : idx) atom.args.push_back(pool[i]);
      atoms.insert(std::move(atom));
      std::size_t d = k;
      while (d > 0) {
        --d;
        if (++idx[d] < pool.size()) break;
        idx[d] = 0;
        if (d == 0) goto done;
      }
    }
  done:;
  }
  inst.herbrand.assign(atoms.begin(), atoms.end());
  return inst;
}

Interpretation t_op(const ReasoningInstance& inst, const Interpretation& i) {
  Interpretation out = interpretation_from_dataset(inst.dataset);
  for (const Rule& r : inst.ground_rules) {
    IntervalSet fired = eval2_body_set(r, i);
    if (fired.empty()) continue;
    for (auto& [atom, extent] : head_apply(r.head, fired)) out.add(atom, extent);
  }
  return out;
}

ThreeValuedInterpretation a_op(const ReasoningInstance& inst, const ThreeValuedInterpretation& j) {
  Interpretation base = interpretation_from_dataset(inst.dataset);
  ThreeValuedInterpretation out{base, std::move(base)};
  for (const Rule& r : inst.ground_rules) {
    BodySets body = eval3_body_sets(r, j);
    for (auto& [atom, extent] : head_apply(r.head, body.true_set)) out.lo.add(atom, extent);
    for (auto& [atom, extent] : head_apply(r.head, body.notfalse_set)) out.hi.add(atom, extent);
  }
  return out;
}

Interpretation a1_op(const ReasoningInstance& inst, const ThreeValuedInterpretation& j) {
  Interpretation out = interpretation_from_dataset(inst.dataset);
  for (const Rule& r : inst.ground_rules) {
    BodySets body = eval3_body_sets(r, j);
    for (auto& [atom, extent] : head_apply(r.head, body.true_set)) out.add(atom, extent);
  }
  return out;
}

Interpretation a2_op(const ReasoningInstance& inst, const ThreeValuedInterpretation& j) {
  Interpretation out = interpretation_from_dataset(inst.dataset);
  for (const Rule& r : inst.ground_rules) {
    BodySets body = eval3_body_sets(r, j);
    for (auto& [atom, extent] : head_apply(r.head, body.notfalse_set)) out.add(atom, extent);
  }
  return out;
}

}  // namespace mtlog
