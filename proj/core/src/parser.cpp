#include "mtlog/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace mtlog {
namespace {

enum class TokKind {
  Ident,
  Number,
  NegInf,
  PosInf,
  LBrack,
  RBrack,
  LParen,
  RParen,
  Comma,
  Period,
  At,
  Semi,
  Arrow,
  End,
};

struct Token {
  TokKind kind;
  std::string text;
  TimePoint number = 0;
  int line = 1;
  int column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_trivia();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) {
      tok.kind = TokKind::End;
      return tok;
    }
    char c = text_[pos_];
    switch (c) {
      case '[': return single(tok, TokKind::LBrack);
      case ']': return single(tok, TokKind::RBrack);
      case '(': return single(tok, TokKind::LParen);
      case ')': return single(tok, TokKind::RParen);
      case ',': return single(tok, TokKind::Comma);
      case '.': return single(tok, TokKind::Period);
      case '@': return single(tok, TokKind::At);
      case ';': return single(tok, TokKind::Semi);
      case ':':
        if (peek(1) == '-') {
          advance();
          advance();
          tok.kind = TokKind::Arrow;
          return tok;
        }
        throw SyntaxError("unexpected ':'", line_, column_);
      default:
        break;
    }
    if (c == '+' || c == '-') {
      if (match_word(pos_ + 1, "inf")) {
        tok.kind = c == '+' ? TokKind::PosInf : TokKind::NegInf;
        advance_n(4);
        return tok;
      }
      if (std::isdigit(static_cast<unsigned char>(peek(1)))) return lex_number(tok);
      throw SyntaxError(std::string("unexpected '") + c + "'", line_, column_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(tok);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        advance();
      }
      tok.text = std::string(text_.substr(start, pos_ - start));
      if (tok.text == "inf") throw SyntaxError("'inf' requires an explicit sign", tok.line, tok.column);
      tok.kind = TokKind::Ident;
      return tok;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", line_, column_);
  }

private:
  Token& single(Token& tok, TokKind k) {
    tok.kind = k;
    advance();
    return tok;
  }

  Token lex_number(Token& tok) {
    std::size_t start = pos_;
    if (text_[pos_] == '+' || text_[pos_] == '-') advance();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    std::string digits(text_.substr(start, pos_ - start));
    try {
      tok.number = std::stoll(digits);
    } catch (const std::exception&) {
      throw SyntaxError("integer out of range: " + digits, tok.line, tok.column);
    }
    tok.kind = TokKind::Number;
    tok.text = digits;
    return tok;
  }

  bool match_word(std::size_t at, std::string_view word) const {
    if (text_.substr(at, word.size()) != word) return false;
    std::size_t end = at + word.size();
    if (end < text_.size()) {
      char c = text_[end];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') return false;
    }
    return true;
  }

  char peek(std::size_t off) const {
    return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void advance_n(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) advance();
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
public:
  explicit Parser(std::string_view text) : lexer_(text) { cur_ = lexer_.next(); }

  Program parse_program() {
    Program program;
    std::set<std::string> seen;
    while (cur_.kind != TokKind::End) {
      Rule rule = parse_rule();
      if (seen.insert(rule.to_string()).second) program.rules.push_back(std::move(rule));
    }
    return program;
  }

  Dataset parse_dataset() {
    Dataset dataset;
    std::set<std::string> seen;
    while (cur_.kind != TokKind::End) {
      Token at_tok = cur_;
      RelationalAtom atom = parse_relational_atom();
      if (!atom.ground()) {
        throw SyntaxError("non-ground fact: " + atom.to_string(), at_tok.line, at_tok.column);
      }
      expect(TokKind::At, "'@'");
      GroundAtom ground = to_ground(atom);
      while (true) {
        Interval iv = parse_interval();
        Fact fact{ground, iv};
        if (seen.insert(fact.to_string()).second) dataset.facts.push_back(fact);
        if (cur_.kind == TokKind::Semi) {
          consume();
          continue;
        }
        break;
      }
    }
    return dataset;
  }

  MetricAtom parse_single_atom() {
    MetricAtom m = parse_metric_atom();
    expect(TokKind::End, "end of input");
    return m;
  }

  Interval parse_single_interval() {
    Interval iv = parse_interval();
    expect(TokKind::End, "end of input");
    return iv;
  }

private:
  Rule parse_rule() {
    Token head_tok = cur_;
    MetricAtom head = parse_metric_atom();
    if (!is_head_atom(head)) {
      throw SyntaxError("not a valid rule head (only top, relational atoms, boxminus and boxplus are allowed): " +
                            head.to_string(),
                        head_tok.line, head_tok.column);
    }
    if (!head_deltas_finite(head)) {
      throw SyntaxError("rule head interval must have finite endpoints: " + head.to_string(),
                        head_tok.line, head_tok.column);
    }
    Rule rule{std::move(head), {}, {}};
    if (cur_.kind == TokKind::Arrow) {
      consume();
      while (true) {
        bool negated = false;
        if (cur_.kind == TokKind::Ident && cur_.text == "not") {
          consume();
          negated = true;
        }
        MetricAtom m = parse_metric_atom();
        (negated ? rule.negative : rule.positive).push_back(std::move(m));
        if (cur_.kind == TokKind::Comma) {
          consume();
          continue;
        }
        break;
      }
    }
    expect(TokKind::Period, "'.'");
    check_safety(rule, head_tok);
    return rule;
  }

  void check_safety(const Rule& rule, const Token& where) {
    std::set<std::string> safe;
    for (const MetricAtom& m : rule.positive) collect_safe_variables(m, safe);
    std::set<std::string> head_vars;
    collect_variables(rule.head, head_vars);
    for (const std::string& v : head_vars) {
      if (!safe.count(v)) {
        throw SafetyError("unsafe variable '" + v + "' in head of rule: " + rule.to_string() +
                          " (line " + std::to_string(where.line) + ")");
      }
    }
    std::set<std::string> neg_vars;
    for (const MetricAtom& m : rule.negative) collect_variables(m, neg_vars);
    for (const std::string& v : neg_vars) {
      if (!safe.count(v)) {
        throw SafetyError("unsafe variable '" + v + "' under negation in rule: " + rule.to_string() +
                          " (line " + std::to_string(where.line) + ")");
      }
    }
  }

  MetricAtom parse_metric_atom() {
    MetricAtom m = parse_simple_atom();
    while (cur_.kind == TokKind::Ident && (cur_.text == "S" || cur_.text == "U")) {
      bool is_since = cur_.text == "S";
      Token op_tok = cur_;
      consume();
      Interval delta = parse_operator_interval(op_tok);
      MetricAtom rhs = parse_simple_atom();
      m = is_since ? MetricAtom::since(std::move(m), delta, std::move(rhs))
                   : MetricAtom::until(std::move(m), delta, std::move(rhs));
    }
    return m;
  }

  MetricAtom parse_simple_atom() {
    if (cur_.kind == TokKind::LParen) {
      consume();
      MetricAtom m = parse_metric_atom();
      expect(TokKind::RParen, "')'");
      return m;
    }
    if (cur_.kind != TokKind::Ident) {
      throw SyntaxError("expected a metric atom, found " + describe(cur_), cur_.line, cur_.column);
    }
    const std::string word = cur_.text;
    if (word == "top") {
      consume();
      return MetricAtom::top();
    }
    if (word == "bottom") {
      consume();
      return MetricAtom::bottom();
    }
    if (word == "diamondminus" || word == "diamondplus" || word == "boxminus" || word == "boxplus") {
      Token op_tok = cur_;
      consume();
      Interval delta = parse_operator_interval(op_tok);
      MetricAtom child = parse_simple_atom();
      if (word == "diamondminus") return MetricAtom::diamond_minus(delta, std::move(child));
      if (word == "diamondplus") return MetricAtom::diamond_plus(delta, std::move(child));
      if (word == "boxminus") return MetricAtom::box_minus(delta, std::move(child));
      return MetricAtom::box_plus(delta, std::move(child));
    }
    if (word == "not") {
      throw SyntaxError("'not' may only negate a whole body literal", cur_.line, cur_.column);
    }
    return MetricAtom::rel(parse_relational_atom());
  }

  RelationalAtom parse_relational_atom() {
    Token name_tok = expect(TokKind::Ident, "predicate name");
    RelationalAtom atom;
    atom.predicate = name_tok.text;
    if (cur_.kind == TokKind::LParen) {
      consume();
      while (true) {
        atom.args.push_back(parse_term());
        if (cur_.kind == TokKind::Comma) {
          consume();
          continue;
        }
        break;
      }
      expect(TokKind::RParen, "')'");
    }
    auto [it, inserted] = arity_.emplace(atom.predicate, atom.args.size());
    if (!inserted && it->second != atom.args.size()) {
      throw SyntaxError("predicate '" + atom.predicate + "' used with arity " +
                            std::to_string(atom.args.size()) + " but previously with " +
                            std::to_string(it->second),
                        name_tok.line, name_tok.column);
    }
    return atom;
  }

  Term parse_term() {
    if (cur_.kind == TokKind::Number) {
      Token t = consume();
      return Term::constant(t.text);
    }
    Token t = expect(TokKind::Ident, "term");
    if (std::islower(static_cast<unsigned char>(t.text[0]))) return Term::variable(t.text);
    return Term::constant(t.text);
  }

  Interval parse_operator_interval(const Token& op_tok) {
    Interval delta = parse_interval();
    if (!delta.non_negative()) {
      throw SyntaxError("operator interval must be non-negative: " + delta.to_string(),
                        op_tok.line, op_tok.column);
    }
    return delta;
  }

  Interval parse_interval() {
    Token start = cur_;
    if (cur_.kind == TokKind::Number) {
      Token t = consume();
      return Interval::point(t.number);
    }
    bool lo_closed;
    if (cur_.kind == TokKind::LBrack) {
      lo_closed = true;
    } else if (cur_.kind == TokKind::LParen) {
      lo_closed = false;
    } else {
      throw SyntaxError("expected an interval, found " + describe(cur_), cur_.line, cur_.column);
    }
    consume();
    TimeBound lo = parse_bound();
    expect(TokKind::Comma, "','");
    TimeBound hi = parse_bound();
    bool hi_closed;
    if (cur_.kind == TokKind::RBrack) {
      hi_closed = true;
    } else if (cur_.kind == TokKind::RParen) {
      hi_closed = false;
    } else {
      throw SyntaxError("expected ']' or ')', found " + describe(cur_), cur_.line, cur_.column);
    }
    consume();
    auto iv = Interval::make(lo, lo_closed, hi, hi_closed);
    if (!iv) {
      throw SyntaxError("empty or ill-formed interval (infinite endpoints must use open brackets)",
                        start.line, start.column);
    }
    return *iv;
  }

  TimeBound parse_bound() {
    if (cur_.kind == TokKind::Number) return TimeBound::finite(consume().number);
    if (cur_.kind == TokKind::NegInf) {
      consume();
      return TimeBound::neg_inf();
    }
    if (cur_.kind == TokKind::PosInf) {
      consume();
      return TimeBound::pos_inf();
    }
    throw SyntaxError("expected an interval endpoint, found " + describe(cur_), cur_.line, cur_.column);
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case TokKind::End: return "end of input";
      case TokKind::Ident:
      case TokKind::Number:
        return "'" + t.text + "'";
      case TokKind::NegInf: return "'-inf'";
      case TokKind::PosInf: return "'+inf'";
      case TokKind::LBrack: return "'['";
      case TokKind::RBrack: return "']'";
      case TokKind::LParen: return "'('";
      case TokKind::RParen: return "')'";
      case TokKind::Comma: return "','";
      case TokKind::Period: return "'.'";
      case TokKind::At: return "'@'";
      case TokKind::Semi: return "';'";
      case TokKind::Arrow: return "':-'";
    }
    return "?";
  }

  Token expect(TokKind kind, const std::string& what) {
    if (cur_.kind != kind) {
      throw SyntaxError("expected " + what + ", found " + describe(cur_), cur_.line, cur_.column);
    }
    return consume();
  }

  Token consume() {
    Token out = cur_;
    cur_ = lexer_.next();
    return out;
  }

  Lexer lexer_;
  Token cur_;
  std::map<std::string, std::size_t> arity_;
};

}  // namespace

Program parse_program(std::string_view text) {
  return Parser(text).parse_program();
}

Dataset parse_dataset(std::string_view text) {
  return Parser(text).parse_dataset();
}

MetricAtom parse_ground_metric_atom(std::string_view text) {
  MetricAtom m = Parser(text).parse_single_atom();
  if (!m.ground()) throw SyntaxError("metric atom must be ground: " + m.to_string());
  return m;
}

Interval parse_interval_text(std::string_view text) {
  return Parser(text).parse_single_interval();
}

}  // namespace mtlog
