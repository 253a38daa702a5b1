#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace cohom {

using Complex = std::complex<double>;

/// A nonzero complex number stored as (log magnitude, phase), so that
/// products of thousands of factors neither underflow nor overflow.
/// log_mag = -inf encodes exact zero (phase is then meaningless).
struct LogComplex {
  double log_mag = -std::numeric_limits<double>::infinity();
  double phase = 0.0;

  static LogComplex one() { return LogComplex{0.0, 0.0}; }
  static LogComplex zero() { return LogComplex{}; }

  static LogComplex from(Complex z) {
    double a = std::abs(z);
    if (a == 0.0) return zero();
    return LogComplex{std::log(a), std::arg(z)};
  }

  bool is_zero() const { return std::isinf(log_mag) && log_mag < 0; }

  Complex value() const {
    if (is_zero()) return Complex(0.0, 0.0);
    double m = std::exp(log_mag);
    return Complex(m * std::cos(phase), m * std::sin(phase));
  }

  double abs() const { return is_zero() ? 0.0 : std::exp(log_mag); }

  LogComplex& operator*=(const LogComplex& o) {
    if (is_zero() || o.is_zero()) {
      *this = zero();
      return *this;
    }
    log_mag += o.log_mag;
    phase = wrap(phase + o.phase);
    return *this;
  }

  LogComplex& operator/=(const LogComplex& o) {
    log_mag -= o.log_mag;  // dividing by zero yields +inf magnitude; callers guard
    phase = wrap(phase - o.phase);
    return *this;
  }

  friend LogComplex operator*(LogComplex a, const LogComplex& b) { return a *= b; }
  friend LogComplex operator/(LogComplex a, const LogComplex& b) { return a /= b; }

  // Keeps the phase in (-pi, pi] so long accumulations do not lose precision.
  static double wrap(double ph) {
    if (ph > M_PI || ph <= -M_PI) ph = std::remainder(ph, 2.0 * M_PI);
    return ph;
  }
};

}  // namespace cohom
