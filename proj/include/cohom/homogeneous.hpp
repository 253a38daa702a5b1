#pragma once

#include <vector>

#include "cohom/tensor.hpp"

namespace cohom {

/// The two seeded solutions of the homogeneous difference equation
/// b_plus(k-1) g(k-1) = b_minus(k+1) g(k+1), tabulated over a window:
/// g0 seeded (1, 0) and g1 seeded (0, 1) at (i_nu, i_nu+1). In the
/// non-discrete series both are annihilated by X termwise; in the discrete
/// series g1 fails the bottom equation by design and only its interior
/// recurrence is meaningful.
struct HomogeneousPair {
  IrrepParams params;
  long long lo = 0;
  std::vector<LogComplex> g0, g1;

  static HomogeneousPair tabulate(const IrrepParams& p, long long lo, long long hi);

  const LogComplex& g0_at(long long k) const { return g0[static_cast<std::size_t>(k - lo)]; }
  const LogComplex& g1_at(long long k) const { return g1[static_cast<std::size_t>(k - lo)]; }
};

/// Green's function G(k,l): the 2x2 determinant ratio of (g0,g1) rows at
/// (l,k) over rows at (l,l+1). Zero when k and l share parity; 1 at k = l+1.
Complex green(const IrrepParams& p, long long k, long long l);

/// Max interior residual of the difference equation
/// b_plus(k-1) g(k-1) - b_minus(k+1) g(k+1) = f(k), including the exact
/// bottom equation f(n) = -b_minus(n+1) g(n+1) when a discrete window
/// starts at n.
double difference_rhs_check(const IrrepParams& p, const CoeffTensor& g,
                            const CoeffTensor& f);

}  // namespace cohom
