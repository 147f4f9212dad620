#pragma once

#include <stdexcept>
#include <string>

namespace twr {

// Operand shapes disagree (vector/multivector dimension, arity).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An input lies outside the domain of the operation: null vector where a
// non-null one is required, superluminal speed, non-invertible versor, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two timelike vectors that are not consistently time oriented.
class OrientationError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The two vectors spanning a rotation plane are (numerically) dependent.
class DegeneratePlaneError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Round-off pushed a quantity out of range by more than the clamp window.
class NumericError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Two computational routes that must agree did not. Always a bug or a
// violated precondition that slipped through.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace twr
