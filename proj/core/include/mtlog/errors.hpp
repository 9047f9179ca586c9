#pragma once

#include <stdexcept>
#include <string>

namespace mtlog {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed program, dataset, interval or atom text. Carries a 1-based
/// source position when one is known (0 means "not applicable").
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& msg, int line = 0, int column = 0)
      : Error(format(msg, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  static std::string format(const std::string& msg, int line, int column) {
    if (line <= 0) return msg;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
  }
  int line_ = 0;
  int column_ = 0;
};

/// A rule violates the safety condition; the message names the variable
/// and the offending rule.
class SafetyError : public Error {
public:
  using Error::Error;
};

/// A fixpoint iteration exceeded its iteration cap or escaped its support
/// horizon without stabilizing.
class NonTermination : public Error {
public:
  using Error::Error;
};

/// An enumeration would exceed the configured state-space budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

}  // namespace mtlog
