#pragma once

#include <utility>
#include <vector>

#include "lift/knots.hpp"

namespace lift {

// Continuous piecewise linear function: value theta[l] at knot l, affine in
// between.
struct Spline1D {
  KnotSequence knots;
  std::vector<double> theta;
};

double evaluate_spline(const Spline1D& s, double x, bool clamp = false);

enum class Loss1D { squared, absolute };

// squared: exact minimizer through the normal equations with ridge 1e-10.
// absolute: iteratively reweighted least squares (smoothing 1e-8, at most
// 200 iterations, stop when the relative objective change drops below
// 1e-10), returning the best iterate found.
Spline1D fit_spline_1d(const std::vector<std::pair<double, double>>& data,
                       const KnotSequence& knots, Loss1D loss);

// Knots at the sorted x values, theta the matching y values; exact at every
// data point.  Requires N >= 2 pairwise distinct abscissae.
Spline1D interpolate_exact(std::vector<std::pair<double, double>> data);

double squared_objective(const Spline1D& s,
                         const std::vector<std::pair<double, double>>& data);
double absolute_objective(const Spline1D& s,
                          const std::vector<std::pair<double, double>>& data);

}  // namespace lift
