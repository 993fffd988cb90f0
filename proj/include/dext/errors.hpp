#pragma once

#include <stdexcept>
#include <string>

namespace dext {

/// Raised when two values from different field configurations are mixed.
struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AlphabetMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A relation or a piece of DE-data violates the required grading.
struct NonHomogeneous : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// det(sigma) failed to kill a base relation or to be multiplicative.
struct EndomorphismViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotTrimmed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotQuadratic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParameterConstraintViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

}  // namespace dext
