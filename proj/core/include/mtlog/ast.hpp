#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mtlog/interval.hpp"

namespace mtlog {

/// A constant or a variable. Lexically, identifiers starting with a
/// lowercase letter are variables, everything else is a constant.
struct Term {
  enum class Kind { Constant, Variable };
  Kind kind = Kind::Constant;
  std::string name;

  static Term constant(std::string n) { return Term{Kind::Constant, std::move(n)}; }
  static Term variable(std::string n) { return Term{Kind::Variable, std::move(n)}; }
  bool is_variable() const { return kind == Kind::Variable; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

struct RelationalAtom {
  std::string predicate;
  std::vector<Term> args;

  bool ground() const;
  std::string to_string() const;

  friend bool operator==(const RelationalAtom&, const RelationalAtom&) = default;
};

/// A fully instantiated relational atom; the key type of interpretations.
struct GroundAtom {
  std::string predicate;
  std::vector<std::string> args;

  std::string to_string() const;

  friend bool operator==(const GroundAtom&, const GroundAtom&) = default;
  friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

/// Converts a variable-free relational atom.
GroundAtom to_ground(const RelationalAtom& atom);
RelationalAtom from_ground(const GroundAtom& atom);

/// Immutable metric-atom syntax tree.
class MetricAtom {
public:
  enum class Kind {
    Top,
    Bottom,
    Rel,
    DiamondMinus,
    DiamondPlus,
    BoxMinus,
    BoxPlus,
    Since,
    Until,
  };

  static MetricAtom top();
  static MetricAtom bottom();
  static MetricAtom rel(RelationalAtom atom);
  static MetricAtom diamond_minus(Interval delta, MetricAtom m);
  static MetricAtom diamond_plus(Interval delta, MetricAtom m);
  static MetricAtom box_minus(Interval delta, MetricAtom m);
  static MetricAtom box_plus(Interval delta, MetricAtom m);
  static MetricAtom since(MetricAtom lhs, Interval delta, MetricAtom rhs);
  static MetricAtom until(MetricAtom lhs, Interval delta, MetricAtom rhs);

  Kind kind() const;
  bool is_unary_temporal() const;
  bool is_binary_temporal() const;

  const RelationalAtom& atom() const;  // Rel only
  const Interval& delta() const;       // temporal kinds only
  const MetricAtom& child() const;     // unary temporal
  const MetricAtom& lhs() const;       // since/until
  const MetricAtom& rhs() const;       // since/until

  bool ground() const;
  std::string to_string() const;

  friend bool operator==(const MetricAtom& a, const MetricAtom& b);

private:
  struct Node;
  explicit MetricAtom(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct MetricAtom::Node {
  Kind kind;
  std::optional<Interval> delta;
  std::optional<RelationalAtom> atom;
  std::vector<MetricAtom> children;
};

inline MetricAtom::Kind MetricAtom::kind() const { return node_->kind; }

/// Head grammar check: top, relational atoms, and box operators only,
/// applied recursively.
bool is_head_atom(const MetricAtom& m);
/// True when every delta in the (head) atom has finite endpoints.
bool head_deltas_finite(const MetricAtom& m);

/// All variable names occurring anywhere in the atom.
void collect_variables(const MetricAtom& m, std::set<std::string>& out);
/// Variables in positions other than a left operand of since/until.
void collect_safe_variables(const MetricAtom& m, std::set<std::string>& out);

/// Applies a variable-to-constant substitution.
MetricAtom substitute(const MetricAtom& m, const std::map<std::string, std::string>& binding);

struct Rule {
  MetricAtom head;
  std::vector<MetricAtom> positive;
  std::vector<MetricAtom> negative;

  bool ground() const;
  std::set<std::string> variables() const;
  std::string to_string() const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Program {
  std::vector<Rule> rules;
  std::string to_string() const;
};

struct Fact {
  GroundAtom atom;
  Interval interval;

  std::string to_string() const;
  friend bool operator==(const Fact&, const Fact&) = default;
};

struct Dataset {
  std::vector<Fact> facts;
  std::string to_string() const;
};

}  // namespace mtlog
