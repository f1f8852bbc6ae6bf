#pragma once

#include <stdexcept>
#include <string>

namespace freeop {

/// Malformed or inconsistent input: bad dimensions, unknown variables,
/// references that do not resolve.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Groebner computation exceeded its configured degree or basis-size cap.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical object failed one of its defining checks (a section that
/// is not a section, an operator that does not respect a relation, ...).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in the input language; carries the source position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, int line, int column, std::string token)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message +
                   (token.empty() ? std::string() : " (at '" + token + "')")),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  int line_;
  int column_;
  std::string token_;
};

}  // namespace freeop
