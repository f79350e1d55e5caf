#pragma once

#include <stdexcept>
#include <string>

namespace primal {

// Base class for everything this library throws. Structure-rule violations
// (a family failing the primal/grill/topology axioms) are reported as values,
// not exceptions; exceptions are reserved for contract breaches and bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfUniverse : public Error {
 public:
  using Error::Error;
};

class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

class UniverseTooLargeForScan : public Error {
 public:
  using Error::Error;
};

class ScopeTooLarge : public Error {
 public:
  using Error::Error;
};

class NotOpen : public Error {
 public:
  using Error::Error;
};

// Positional parse error for space files and subset literals.
// line/column are 1-based; 0 means "not known at this level".
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& message)
      : Error(format(line, column, message)),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  static std::string format(int line, int column, const std::string& message) {
    std::string s = "syntax error";
    if (line > 0) s += " at line " + std::to_string(line);
    if (column > 0) s += ", column " + std::to_string(column);
    return s + ": " + message;
  }

  int line_;
  int column_;
  std::string message_;
};

// A structurally well-formed input that fails validation (e.g. a space file
// whose open-set lines do not form a topology). Carries the violated rule
// name so front ends can print a precise diagnostic.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& rule, const std::string& detail)
      : Error(rule + ": " + detail), rule_(rule) {}

  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

}  // namespace primal
