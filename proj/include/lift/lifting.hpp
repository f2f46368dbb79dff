#pragma once

#include <utility>
#include <vector>

#include "lift/knots.hpp"

namespace lift {

enum class LiftMode { standard, scaled, relaxed };

// standard: interpolation weights between two adjacent knots (sparse, sums
//   to 1, inverse is the knot-weighted sum)
// scaled:   weights carry the knot magnitudes, inverse is the component sum
// relaxed:  any point of the unit simplex (e.g. products of assignment
//   matrices with standard lifts)
struct LiftedVector {
  std::vector<double> coeffs;
  LiftMode mode = LiftMode::standard;
};

// Raise x to the interpolation-weight vector over the knots.  The active
// interval is left-closed; the weight pair is computed as (1-lam, lam), which
// keeps both entries in [0,1] and their sum exactly 1.0 in double precision.
// Out-of-range x throws DomainError unless clamp is set.
LiftedVector lift(double x, const KnotSequence& knots, bool clamp = false);

// Knot-weighted sum for standard/relaxed mode, plain component sum for
// scaled mode.  Throws DimensionError on length mismatch.
double inverse_lift(const LiftedVector& z, const KnotSequence& knots);

// Variant whose components are ((1-lam)*t[l], lam*t[l+1]); the component sum
// recovers x.  With extend set, lam extrapolates linearly beyond the boundary
// intervals and any real x is accepted.
LiftedVector scaled_lift(double x, const KnotSequence& knots,
                         bool extend = false);

// two-channel split (max(x,0), min(x,0))
std::pair<double, double> reduced_lift(double x);

// Derivative of lift/scaled_lift with respect to x.  At a knot the
// right-adjacent interval's slope is used.
std::vector<double> lift_jacobian(double x, const KnotSequence& knots,
                                  LiftMode mode, bool extend = false);

// Exact (bit-level) membership test for the range of the standard lift:
// all entries in [0,1], some adjacent pair sums to exactly 1, every entry
// outside that pair is exactly 0.
bool standard_range_ok(const std::vector<double>& z);

// entries >= -tol and |sum - 1| <= tol (tol = 0 gives the exact test)
bool in_unit_simplex(const std::vector<double>& z, double tol);

}  // namespace lift
