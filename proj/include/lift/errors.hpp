#pragma once

#include <stdexcept>

namespace lift {

// Input outside the range an operation is defined on (knot range, config bounds).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vector/matrix length does not match what the operation expects.
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor shapes incompatible between adjacent network layers or operands.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation called in the wrong order (e.g. backward without a cached forward).
struct StateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Barycentric system numerically singular for the queried simplex.
struct SingularSimplexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Point not contained in any simplex of the triangulation.
struct OutsideDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two data points share an x value where distinct abscissae are required.
struct DuplicateAbscissaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A retry loop (gradient-check kink avoidance) ran out of attempts.
struct RetryExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lift
