#include "lift/knots.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lift/errors.hpp"

namespace lift {

KnotSequence::KnotSequence(std::vector<double> knots) : t_(std::move(knots)) {
  if (t_.size() < 2)
    throw DomainError("KnotSequence: need at least 2 knots, got " +
                      std::to_string(t_.size()));
  for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
    if (!(t_[i] < t_[i + 1]))
      throw DomainError("KnotSequence: knots must be strictly increasing at index " +
                        std::to_string(i));
    if (!std::isfinite(t_[i]) || !std::isfinite(t_[i + 1]))
      throw DomainError("KnotSequence: knots must be finite");
  }
}

KnotSequence KnotSequence::uniform(double lo, double hi, std::size_t count) {
  if (count < 2)
    throw DomainError("KnotSequence::uniform: need at least 2 knots");
  std::vector<double> t(count);
  double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i)
    t[i] = lo + static_cast<double>(i) * step;
  t[count - 1] = hi;
  return KnotSequence(std::move(t));
}

std::size_t KnotSequence::interval_index(double x) const {
  auto it = std::upper_bound(t_.begin(), t_.end(), x);
  std::ptrdiff_t idx = (it - t_.begin()) - 1;
  std::ptrdiff_t last = static_cast<std::ptrdiff_t>(t_.size()) - 2;
  if (idx < 0) idx = 0;
  if (idx > last) idx = last;
  return static_cast<std::size_t>(idx);
}

bool KnotSequence::contains(double x) const {
  double scale = std::max({1.0, std::fabs(lo()), std::fabs(hi())});
  double tol = 1e-12 * scale;
  return x >= lo() - tol && x <= hi() + tol;
}

double KnotSequence::clamped(double x) const {
  return std::min(std::max(x, lo()), hi());
}

}  // namespace lift
