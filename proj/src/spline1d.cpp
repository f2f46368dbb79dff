#include "lift/spline1d.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "lift/errors.hpp"
#include "lift/lifting.hpp"

namespace lift {

namespace {

struct SparseRow {
  std::size_t l;
  double w0, w1;  // weights at knots l and l+1
};

SparseRow lift_row(double x, const KnotSequence& knots) {
  std::size_t l = knots.interval_index(knots.clamped(x));
  double lam = (knots.clamped(x) - knots[l]) / (knots[l + 1] - knots[l]);
  return {l, 1.0 - lam, lam};
}

void check_in_range(const std::vector<std::pair<double, double>>& data,
                    const KnotSequence& knots, const char* op) {
  for (const auto& [x, y] : data) {
    (void)y;
    if (!knots.contains(x))
      throw DomainError(std::string(op) + ": data point x = " +
                        std::to_string(x) + " outside knot range");
  }
}

// weighted ridge normal equations over the lifted design
std::vector<double> solve_weighted(
    const std::vector<std::pair<double, double>>& data,
    const KnotSequence& knots, const std::vector<double>* weights) {
  std::size_t L = knots.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(L, L);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(L);
  for (std::size_t i = 0; i < data.size(); ++i) {
    SparseRow r = lift_row(data[i].first, knots);
    double wt = weights ? (*weights)[i] : 1.0;
    double y = data[i].second;
    a(r.l, r.l) += wt * r.w0 * r.w0;
    a(r.l, r.l + 1) += wt * r.w0 * r.w1;
    a(r.l + 1, r.l) += wt * r.w1 * r.w0;
    a(r.l + 1, r.l + 1) += wt * r.w1 * r.w1;
    b(r.l) += wt * r.w0 * y;
    b(r.l + 1) += wt * r.w1 * y;
  }
  for (std::size_t l = 0; l < L; ++l) a(l, l) += 1e-10;
  Eigen::VectorXd sol = a.ldlt().solve(b);
  return std::vector<double>(sol.data(), sol.data() + L);
}

}  // namespace

double evaluate_spline(const Spline1D& s, double x, bool clamp) {
  if (s.theta.size() != s.knots.size())
    throw DimensionError("evaluate_spline: theta length does not match knots");
  if (!clamp && !s.knots.contains(x))
    throw DomainError("evaluate_spline: input " + std::to_string(x) +
                      " outside knot range");
  SparseRow r = lift_row(x, s.knots);
  return s.theta[r.l] * r.w0 + s.theta[r.l + 1] * r.w1;
}

Spline1D fit_spline_1d(const std::vector<std::pair<double, double>>& data,
                       const KnotSequence& knots, Loss1D loss) {
  check_in_range(data, knots, "fit_spline_1d");
  if (loss == Loss1D::squared)
    return {knots, solve_weighted(data, knots, nullptr)};

  // absolute loss by IRLS from the squared-loss start
  const double eps = 1e-8;
  Spline1D s{knots, solve_weighted(data, knots, nullptr)};
  double best_obj = absolute_objective(s, data);
  std::vector<double> best_theta = s.theta;
  double prev_obj = best_obj;
  std::vector<double> w(data.size());
  for (int iter = 0; iter < 200; ++iter) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      double r = evaluate_spline(s, data[i].first, true) - data[i].second;
      w[i] = 1.0 / std::sqrt(r * r + eps * eps);
    }
    s.theta = solve_weighted(data, knots, &w);
    double obj = absolute_objective(s, data);
    if (obj < best_obj) {
      best_obj = obj;
      best_theta = s.theta;
    }
    if (std::fabs(obj - prev_obj) <= 1e-10 * std::max(1.0, std::fabs(prev_obj)))
      break;
    prev_obj = obj;
  }
  s.theta = std::move(best_theta);
  return s;
}

Spline1D interpolate_exact(std::vector<std::pair<double, double>> data) {
  if (data.size() < 2)
    throw DomainError("interpolate_exact: need at least 2 points");
  std::sort(data.begin(), data.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<double> xs(data.size()), ys(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (i > 0 && data[i].first == data[i - 1].first)
      throw DuplicateAbscissaError("interpolate_exact: duplicate x = " +
                                   std::to_string(data[i].first));
    xs[i] = data[i].first;
    ys[i] = data[i].second;
  }
  return {KnotSequence(std::move(xs)), std::move(ys)};
}

double squared_objective(const Spline1D& s,
                         const std::vector<std::pair<double, double>>& data) {
  double obj = 0.0;
  for (const auto& [x, y] : data) {
    double r = evaluate_spline(s, x, true) - y;
    obj += r * r;
  }
  return obj;
}

double absolute_objective(const Spline1D& s,
                          const std::vector<std::pair<double, double>>& data) {
  double obj = 0.0;
  for (const auto& [x, y] : data)
    obj += std::fabs(evaluate_spline(s, x, true) - y);
  return obj;
}

}  // namespace lift
