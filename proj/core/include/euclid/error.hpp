#pragma once

#include <stdexcept>
#include <string>

namespace euclid {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (negative length, minute >= 60, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Inputs that collapse the construction (coincident points, equal circles).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// The construction problem has no solution for the given data.
class Infeasible : public Error {
 public:
  using Error::Error;
};

// Regular polygon that no macro builds (it may still be constructible).
class NotConstructible : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class UnresolvedName : public Error {
 public:
  using Error::Error;
};

// A script `assert` did not hold at its tolerance.
class AssertionFailed : public Error {
 public:
  AssertionFailed(const std::string& what, double measured, double expected)
      : Error(what), measured_(measured), expected_(expected) {}

  double measured() const noexcept { return measured_; }
  double expected() const noexcept { return expected_; }

 private:
  double measured_;
  double expected_;
};

}  // namespace euclid
