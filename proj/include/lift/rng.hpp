#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace lift {

// Counter-based generator built on the splitmix64 finalizer.  Output i of a
// stream is mix64(key + (i+1)*gamma) with key = seed + stream*stream_mult,
// so draws are a pure function of (seed, stream, counter) and ports in other
// languages can reproduce datasets bit-exactly.  Stream 0 emits the published
// splitmix64 sequence for the same seed; reference values are pinned in the
// rng test and the README.

inline constexpr std::uint64_t kRngGamma = 0x9E3779B97F4A7C15ull;
inline constexpr std::uint64_t kRngStreamMult = 0xD1B54A32D192ED03ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(seed + stream * kRngStreamMult) {}

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kRngGamma); }

  // uniform in [0, 1), 53 random bits
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Box-Muller, consumes exactly two draws per call
  double normal(double mean, double stddev) {
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 == 0.0) u1 = 0x1p-53;
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Fisher-Yates, high index down, modulo draw
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i-- > 1;) {
      std::size_t j = static_cast<std::size_t>(next_u64() % (i + 1));
      std::swap(v[i], v[j]);
    }
  }

  // first k entries of a seeded permutation of {0,...,n-1}
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    if (k > n) k = n;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + static_cast<std::size_t>(next_u64() % (n - i));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace lift
