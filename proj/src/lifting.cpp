#include "lift/lifting.hpp"

#include <cmath>
#include <sstream>

#include "lift/errors.hpp"

namespace lift {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

[[noreturn]] void out_of_range(const char* op, double x,
                               const KnotSequence& knots) {
  throw DomainError(std::string(op) + ": input " + fmt(x) +
                    " outside knot range [" + fmt(knots.lo()) + ", " +
                    fmt(knots.hi()) + "]");
}

}  // namespace

LiftedVector lift(double x, const KnotSequence& knots, bool clamp) {
  if (!clamp && !knots.contains(x)) out_of_range("lift", x, knots);
  double xc = knots.clamped(x);
  std::size_t l = knots.interval_index(xc);
  double lam = (xc - knots[l]) / (knots[l + 1] - knots[l]);
  LiftedVector z{std::vector<double>(knots.size(), 0.0), LiftMode::standard};
  z.coeffs[l] = 1.0 - lam;
  z.coeffs[l + 1] = lam;
  return z;
}

double inverse_lift(const LiftedVector& z, const KnotSequence& knots) {
  if (z.coeffs.size() != knots.size())
    throw DimensionError("inverse_lift: vector length " +
                         std::to_string(z.coeffs.size()) +
                         " does not match knot count " +
                         std::to_string(knots.size()));
  double s = 0.0;
  if (z.mode == LiftMode::scaled) {
    for (double c : z.coeffs) s += c;
    return s;
  }
  for (std::size_t l = 0; l < knots.size(); ++l) s += z.coeffs[l] * knots[l];
  return s;
}

LiftedVector scaled_lift(double x, const KnotSequence& knots, bool extend) {
  if (!extend && !knots.contains(x)) out_of_range("scaled_lift", x, knots);
  std::size_t l = knots.interval_index(x);
  double lam = (x - knots[l]) / (knots[l + 1] - knots[l]);
  LiftedVector z{std::vector<double>(knots.size(), 0.0), LiftMode::scaled};
  z.coeffs[l] = (1.0 - lam) * knots[l];
  z.coeffs[l + 1] = lam * knots[l + 1];
  return z;
}

std::pair<double, double> reduced_lift(double x) {
  return {std::fmax(x, 0.0), std::fmin(x, 0.0)};
}

std::vector<double> lift_jacobian(double x, const KnotSequence& knots,
                                  LiftMode mode, bool extend) {
  if (mode == LiftMode::relaxed)
    throw DomainError("lift_jacobian: mode must be standard or scaled");
  bool scaled = mode == LiftMode::scaled;
  if (!(scaled && extend) && !knots.contains(x))
    out_of_range("lift_jacobian", x, knots);
  std::size_t l = knots.interval_index(knots.clamped(x));
  double dx = knots[l + 1] - knots[l];
  std::vector<double> jac(knots.size(), 0.0);
  if (scaled) {
    jac[l] = -knots[l] / dx;
    jac[l + 1] = knots[l + 1] / dx;
  } else {
    jac[l] = -1.0 / dx;
    jac[l + 1] = 1.0 / dx;
  }
  return jac;
}

bool standard_range_ok(const std::vector<double>& z) {
  std::size_t n = z.size();
  if (n < 2) return false;
  for (double v : z)
    if (!(v >= 0.0 && v <= 1.0)) return false;
  for (std::size_t l = 0; l + 1 < n; ++l) {
    if (z[l] + z[l + 1] != 1.0) continue;
    bool rest_zero = true;
    for (std::size_t k = 0; k < n; ++k)
      if (k != l && k != l + 1 && z[k] != 0.0) rest_zero = false;
    if (rest_zero) return true;
  }
  return false;
}

bool in_unit_simplex(const std::vector<double>& z, double tol) {
  double s = 0.0;
  for (double v : z) {
    if (v < -tol) return false;
    s += v;
  }
  return std::fabs(s - 1.0) <= tol;
}

}  // namespace lift
