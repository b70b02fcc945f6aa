#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ldic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Shapes or index ranges that do not line up (wrong MN, vector lengths, ...).
class StructuralError : public Error {
public:
  using Error::Error;
};

/// Malformed graph or code input. `line()` is 0 when no line applies.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// An enumeration would exceed its configured candidate budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// The operation is not defined for this input (e.g. a fitting matrix of a vector code).
class Unsupported : public Error {
public:
  using Error::Error;
};

/// A documented precondition does not hold (undecodable code, DAG where a cycle is required, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

} // namespace ldic
