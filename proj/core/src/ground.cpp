#include "mtlog/ground.hpp"

#include <map>

namespace mtlog {
namespace {

void collect_constants(const MetricAtom& m, std::set<std::string>& out) {
  switch (m.kind()) {
    case MetricAtom::Kind::Rel:
      for (const Term& t : m.atom().args) {
        if (!t.is_variable()) out.insert(t.name);
      }
      return;
    case MetricAtom::Kind::Since:
    case MetricAtom::Kind::Until:
      collect_constants(m.lhs(), out);
      collect_constants(m.rhs(), out);
      return;
    case MetricAtom::Kind::Top:
    case MetricAtom::Kind::Bottom:
      return;
    default:
      collect_constants(m.child(), out);
  }
}

}  // namespace

std::set<std::string> active_constants(const Program& program, const Dataset& dataset) {
  std::set<std::string> out;
  bool has_variables = false;
  for (const Rule& r : program.rules) {
    collect_constants(r.head, out);
    for (const MetricAtom& m : r.positive) collect_constants(m, out);
    for (const MetricAtom& m : r.negative) collect_constants(m, out);
    if (!r.variables().empty()) has_variables = true;
  }
  for (const Fact& f : dataset.facts) {
    out.insert(f.atom.args.begin(), f.atom.args.end());
  }
  if (out.empty() && has_variables) out.insert("C0");
  return out;
}

std::vector<Rule> ground(const Program& program, const std::set<std::string>& constants) {
  std::vector<Rule> out;
  std::set<std::string> seen;
  std::vector<std::string> consts(constants.begin(), constants.end());
  for (const Rule& rule : program.rules) {
    std::set<std::string> var_set = rule.variables();
    std::vector<std::string> vars(var_set.begin(), var_set.end());
    if (vars.empty()) {
      if (seen.insert(rule.to_string()).second) out.push_back(rule);
      continue;
    }
    if (consts.empty()) continue;  // no substitutions exist
    // Odometer over substitutions, lexicographic in (vars, consts) order.
    std::vector<std::size_t> idx(vars.size(), 0);
    while (true) {
      std::map<std::string, std::string> binding;
      for (std::size_t i = 0; i < vars.size(); ++i) binding[vars[i]] = consts[idx[i]];
      Rule inst{substitute(rule.head, binding), {}, {}};
      for (const MetricAtom& m : rule.positive) inst.positive.push_back(substitute(m, binding));
      for (const MetricAtom& m : rule.negative) inst.negative.push_back(substitute(m, binding));
      if (seen.insert(inst.to_string()).second) out.push_back(std::move(inst));

      std::size_t k = vars.size();
      while (k > 0) {
        --k;
        if (++idx[k] < consts.size()) break;
        idx[k] = 0;
        if (k == 0) goto next_rule;
      }
    }
  next_rule:;
  }
  return out;
}

}  // namespace mtlog
