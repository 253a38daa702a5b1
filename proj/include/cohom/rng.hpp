#pragma once

#include <cmath>
#include <cstdint>

#include "cohom/log_complex.hpp"

namespace cohom {

/// splitmix64 stream with a hand-rolled gaussian; avoids the distribution
/// objects of <random>, whose outputs are implementation-defined, so that
/// fixed seeds give identical reports everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(seed ^ (0x9e3779b97f4a7c15ull * (stream + 1))) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// uniform in [0,1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// uniform in [a,b)
  double uniform(double a, double b) { return a + (b - a) * next_double(); }

  long long uniform_int(long long lo, long long hi) {  // inclusive ends
    return lo + static_cast<long long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double gaussian() {
    // Box-Muller; guard the log against an exact zero draw.
    double u1 = next_double();
    double u2 = next_double();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Complex gaussian_complex() { return Complex(gaussian(), gaussian()); }

 private:
  std::uint64_t state_;
};

}  // namespace cohom
