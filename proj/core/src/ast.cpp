#include "mtlog/ast.hpp"

#include <cassert>

namespace mtlog {

bool RelationalAtom::ground() const {
  for (const Term& t : args) {
    if (t.is_variable()) return false;
  }
  return true;
}

static std::string args_to_string(const auto& args, auto name_of) {
  if (args.empty()) return "";
  std::string out = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ",";
    out += name_of(args[i]);
  }
  out += ")";
  return out;
}

std::string RelationalAtom::to_string() const {
  return predicate + args_to_string(args, [](const Term& t) { return t.name; });
}

std::string GroundAtom::to_string() const {
  return predicate + args_to_string(args, [](const std::string& s) { return s; });
}

GroundAtom to_ground(const RelationalAtom& atom) {
  assert(atom.ground());
  GroundAtom out;
  out.predicate = atom.predicate;
  out.args.reserve(atom.args.size());
  for (const Term& t : atom.args) out.args.push_back(t.name);
  return out;
}

RelationalAtom from_ground(const GroundAtom& atom) {
  RelationalAtom out;
  out.predicate = atom.predicate;
  out.args.reserve(atom.args.size());
  for (const std::string& c : atom.args) out.args.push_back(Term::constant(c));
  return out;
}

MetricAtom MetricAtom::top() {
  return MetricAtom(std::make_shared<Node>(Node{Kind::Top, {}, {}, {}}));
}

MetricAtom MetricAtom::bottom() {
  return MetricAtom(std::make_shared<Node>(Node{Kind::Bottom, {}, {}, {}}));
}

MetricAtom MetricAtom::rel(RelationalAtom atom) {
  return MetricAtom(std::make_shared<Node>(Node{Kind::Rel, {}, std::move(atom), {}}));
}

MetricAtom MetricAtom::diamond_minus(Interval delta, MetricAtom m) {
  return MetricAtom(std::make_shared<Node>(Node{Kind::DiamondMinus, delta, {}, {std::move(m)}}));
}

MetricAtom MetricAtom::diamond_plus(Interval delta, MetricAtom m) {
  return MetricAtom(std::make_shared<Node>(Node{Kind::DiamondPlus, delta, {}, {std::move(m)}}));
}

MetricAtom MetricAtom::box_minus(Interval delta, MetricAtom m) {
  return MetricAtom(std::make_shared<Node>(Node{Kind::BoxMinus, delta, {}, {std::move(m)}}));
}

MetricAtom MetricAtom::box_plus(Interval delta, MetricAtom m) {
  return MetricAtom(std::make_shared<Node>(Node{Kind::BoxPlus, delta, {}, {std::move(m)}}));
}

MetricAtom MetricAtom::since(MetricAtom lhs, Interval delta, MetricAtom rhs) {
  return MetricAtom(std::make_shared<Node>(Node{Kind::Since, delta, {}, {std::move(lhs), std::move(rhs)}}));
}

MetricAtom MetricAtom::until(MetricAtom lhs, Interval delta, MetricAtom rhs) {
  return MetricAtom(std::make_shared<Node>(Node{Kind::Until, delta, {}, {std::move(lhs), std::move(rhs)}}));
}

bool MetricAtom::is_unary_temporal() const {
  switch (kind()) {
    case Kind::DiamondMinus:
    case Kind::DiamondPlus:
    case Kind::BoxMinus:
    case Kind::BoxPlus:
      return true;
    default:
      return false;
  }
}

bool MetricAtom::is_binary_temporal() const {
  return kind() == Kind::Since || kind() == Kind::Until;
}

const RelationalAtom& MetricAtom::atom() const {
  assert(kind() == Kind::Rel);
  return *node_->atom;
}

const Interval& MetricAtom::delta() const {
  assert(node_->delta.has_value());
  return *node_->delta;
}

const MetricAtom& MetricAtom::child() const {
  assert(is_unary_temporal());
  return node_->children[0];
}

const MetricAtom& MetricAtom::lhs() const {
  assert(is_binary_temporal());
  return node_->children[0];
}

const MetricAtom& MetricAtom::rhs() const {
  assert(is_binary_temporal());
  return node_->children[1];
}

bool MetricAtom::ground() const {
  switch (kind()) {
    case Kind::Top:
    case Kind::Bottom:
      return true;
    case Kind::Rel:
      return atom().ground();
    case Kind::Since:
    case Kind::Until:
      return lhs().ground() && rhs().ground();
    default:
      return child().ground();
  }
}

static const char* unary_keyword(MetricAtom::Kind k) {
  switch (k) {
    case MetricAtom::Kind::DiamondMinus: return "diamondminus";
    case MetricAtom::Kind::DiamondPlus: return "diamondplus";
    case MetricAtom::Kind::BoxMinus: return "boxminus";
    case MetricAtom::Kind::BoxPlus: return "boxplus";
    default: assert(false); return "";
  }
}

// Since/until operands re-parse unambiguously only when parenthesized.
static std::string operand_to_string(const MetricAtom& m) {
  if (m.is_binary_temporal()) return "(" + m.to_string() + ")";
  return m.to_string();
}

std::string MetricAtom::to_string() const {
  switch (kind()) {
    case Kind::Top: return "top";
    case Kind::Bottom: return "bottom";
    case Kind::Rel: return atom().to_string();
    case Kind::Since:
      return operand_to_string(lhs()) + " S" + delta().to_string() + " " + operand_to_string(rhs());
    case Kind::Until:
      return operand_to_string(lhs()) + " U" + delta().to_string() + " " + operand_to_string(rhs());
    default:
      return std::string(unary_keyword(kind())) + delta().to_string() + " " + operand_to_string(child());
  }
}

bool operator==(const MetricAtom& a, const MetricAtom& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.node_->delta != b.node_->delta) return false;
  if (a.node_->atom != b.node_->atom) return false;
  return a.node_->children == b.node_->children;
}

bool is_head_atom(const MetricAtom& m) {
  switch (m.kind()) {
    case MetricAtom::Kind::Top:
    case MetricAtom::Kind::Rel:
      return true;
    case MetricAtom::Kind::BoxMinus:
    case MetricAtom::Kind::BoxPlus:
      return is_head_atom(m.child());
    default:
      return false;
  }
}

bool head_deltas_finite(const MetricAtom& m) {
  if (m.is_unary_temporal()) {
    return m.delta().lo().is_finite() && m.delta().hi().is_finite() && head_deltas_finite(m.child());
  }
  return true;
}

void collect_variables(const MetricAtom& m, std::set<std::string>& out) {
  switch (m.kind()) {
    case MetricAtom::Kind::Rel:
      for (const Term& t : m.atom().args) {
        if (t.is_variable()) out.insert(t.name);
      }
      return;
    case MetricAtom::Kind::Since:
    case MetricAtom::Kind::Until:
      collect_variables(m.lhs(), out);
      collect_variables(m.rhs(), out);
      return;
    case MetricAtom::Kind::Top:
    case MetricAtom::Kind::Bottom:
      return;
    default:
      collect_variables(m.child(), out);
  }
}

void collect_safe_variables(const MetricAtom& m, std::set<std::string>& out) {
  switch (m.kind()) {
    case MetricAtom::Kind::Rel:
      for (const Term& t : m.atom().args) {
        if (t.is_variable()) out.insert(t.name);
      }
      return;
    case MetricAtom::Kind::Since:
    case MetricAtom::Kind::Until:
      collect_safe_variables(m.rhs(), out);
      return;
    case MetricAtom::Kind::Top:
    case MetricAtom::Kind::Bottom:
      return;
    default:
      collect_safe_variables(m.child(), out);
  }
}

MetricAtom substitute(const MetricAtom& m, const std::map<std::string, std::string>& binding) {
  switch (m.kind()) {
    case MetricAtom::Kind::Top:
    case MetricAtom::Kind::Bottom:
      return m;
    case MetricAtom::Kind::Rel: {
      RelationalAtom atom = m.atom();
      for (Term& t : atom.args) {
        if (!t.is_variable()) continue;
        auto it = binding.find(t.name);
        if (it != binding.end()) t = Term::constant(it->second);
      }
      return MetricAtom::rel(std::move(atom));
    }
    case MetricAtom::Kind::DiamondMinus:
      return MetricAtom::diamond_minus(m.delta(), substitute(m.child(), binding));
    case MetricAtom::Kind::DiamondPlus:
      return MetricAtom::diamond_plus(m.delta(), substitute(m.child(), binding));
    case MetricAtom::Kind::BoxMinus:
      return MetricAtom::box_minus(m.delta(), substitute(m.child(), binding));
    case MetricAtom::Kind::BoxPlus:
      return MetricAtom::box_plus(m.delta(), substitute(m.child(), binding));
    case MetricAtom::Kind::Since:
      return MetricAtom::since(substitute(m.lhs(), binding), m.delta(), substitute(m.rhs(), binding));
    default:
      return MetricAtom::until(substitute(m.lhs(), binding), m.delta(), substitute(m.rhs(), binding));
  }
}

bool Rule::ground() const {
  if (!head.ground()) return false;
  for (const MetricAtom& m : positive) {
    if (!m.ground()) return false;
  }
  for (const MetricAtom& m : negative) {
    if (!m.ground()) return false;
  }
  return true;
}

std::set<std::string> Rule::variables() const {
  std::set<std::string> out;
  collect_variables(head, out);
  for (const MetricAtom& m : positive) collect_variables(m, out);
  for (const MetricAtom& m : negative) collect_variables(m, out);
  return out;
}

std::string Rule::to_string() const {
  std::string out = head.to_string();
  if (!positive.empty() || !negative.empty()) {
    out += " :- ";
    bool first = true;
    for (const MetricAtom& m : positive) {
      if (!first) out += ", ";
      out += m.to_string();
      first = false;
    }
    for (const MetricAtom& m : negative) {
      if (!first) out += ", ";
      out += "not " + m.to_string();
      first = false;
    }
  }
  out += ".";
  return out;
}

std::string Program::to_string() const {
  std::string out;
  for (const Rule& r : rules) {
    out += r.to_string();
    out += "\n";
  }
  return out;
}

std::string Fact::to_string() const {
  return atom.to_string() + "@" + interval.to_string();
}

std::string Dataset::to_string() const {
  std::string out;
  for (const Fact& f : facts) {
    out += f.to_string();
    out += "\n";
  }
  return out;
}

}  // namespace mtlog
