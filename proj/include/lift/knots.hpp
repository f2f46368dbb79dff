#pragma once

#include <cstddef>
#include <vector>

namespace lift {

// Strictly increasing breakpoint sequence t[0] < ... < t[L-1], L >= 2.
// Immutable after construction.
class KnotSequence {
 public:
  explicit KnotSequence(std::vector<double> knots);

  // evenly spaced knots with the endpoint pinned exactly to hi
  static KnotSequence uniform(double lo, double hi, std::size_t count);

  std::size_t size() const { return t_.size(); }
  double operator[](std::size_t i) const { return t_[i]; }
  double lo() const { return t_.front(); }
  double hi() const { return t_.back(); }
  const std::vector<double>& values() const { return t_; }

  // left-closed interval lookup: largest l with t[l] <= x, clamped to the
  // final interval (so x = t[L-1], and out-of-range x, map to L-2)
  std::size_t interval_index(double x) const;

  // membership in [lo, hi] within relative tolerance 1e-12
  bool contains(double x) const;
  double clamped(double x) const;

 private:
  std::vector<double> t_;
};

}  // namespace lift
