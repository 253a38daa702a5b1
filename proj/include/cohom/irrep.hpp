#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohom/log_complex.hpp"

namespace cohom {

enum class Series {
  FirstPrincipal,
  SecondPrincipal,
  Complementary,
  FirstDiscrete,
  SecondDiscrete,
};

const char* series_name(Series s);
Series series_from_name(const std::string& name);

/// Parameters of one irreducible unitary SL(2,R) factor.
///
/// mu is the Casimir scalar, nu a fixed root of nu^2 = 1 - 4 mu
/// (+i branch for the principal series, + branch for the complementary
/// series), epsilon the parity of the rotation spectrum, n the discrete
/// lowest index (0 for the non-discrete series), and i_nu the starting
/// index of the adapted basis.
struct IrrepParams {
  Series series = Series::FirstPrincipal;
  double mu = 0.25;
  int epsilon = 0;
  Complex nu{0.0, 0.0};
  int n = 0;
  int i_nu = 0;

  bool discrete() const {
    return series == Series::FirstDiscrete || series == Series::SecondDiscrete;
  }
  /// Lowest basis index in J_nu for discrete factors; the index set is all
  /// of Z otherwise.
  bool index_valid(long long k) const { return !discrete() || k >= n; }

  bool operator==(const IrrepParams& o) const {
    return series == o.series && mu == o.mu && epsilon == o.epsilon && n == o.n;
  }
};

/// Resolve (mu, epsilon) to a series. A hint is required only where the
/// Casimir value alone is ambiguous (mu = 0, shared with the unsupported
/// trivial representation); elsewhere a hint is validated against the match.
IrrepParams classify(double mu, int epsilon,
                     std::optional<Series> series_hint = std::nullopt);

IrrepParams make_first_principal(double mu);
IrrepParams make_second_principal(double mu);
IrrepParams make_complementary(double mu);
IrrepParams make_first_discrete(int n);
IrrepParams make_second_discrete(int n);

/// Raising/lowering coefficients of the diagonal generator in the adapted
/// basis: X u_k = b_plus(k) u_{k+1} - b_minus(k) u_{k-1}.
Complex b_plus(const IrrepParams& p, long long k);
Complex b_minus(const IrrepParams& p, long long k);
/// beta(k) = b_minus(k)/b_plus(k), the one-step ratio of invariant
/// distribution values.
Complex beta(const IrrepParams& p, long long k);

/// Product Pi_{nu,eps,k} of (2i+eps-1-nu)/(2i+eps-1+conj(nu)) for
/// i = i_nu+1..k; empty products are 1. Identically 1 in the principal
/// series (numerator and denominator coincide for imaginary nu).
LogComplex pi_product(const IrrepParams& p, long long k);

/// Squared norm of the basis vector u_k: |Pi_{nu,eps,|k|}|.
double basis_norm_sq(const IrrepParams& p, long long k);

/// log |Pi_{nu,eps,|k|}| for k = lo..hi in one sweep (O(width)).
std::vector<double> basis_log_norm_sq_table(const IrrepParams& p, long long lo,
                                            long long hi);

struct TensorParams {
  std::vector<IrrepParams> factors;

  int d() const { return static_cast<int>(factors.size()); }
  const IrrepParams& factor(int axis) const { return factors.at(axis - 1); }
};

}  // namespace cohom
