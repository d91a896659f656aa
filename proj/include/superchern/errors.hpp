#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superchern {

// Operand shapes disagree (variable counts, matrix shapes, point lengths).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value violates a structural invariant (e.g. a non-odd A').
class InvariantError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact exponential requested for a matrix that is not nilpotent within the search bound.
class NotNilpotentError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Non-finite values in the numeric backend.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed expression or spec file. Column is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column = 0)
      : std::runtime_error(column == 0 ? what : what + " at column " + std::to_string(column)),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

// Bad command-line usage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace superchern
