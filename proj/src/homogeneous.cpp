#include "cohom/homogeneous.hpp"

#include <cmath>

#include "cohom/errors.hpp"

namespace cohom {

HomogeneousPair HomogeneousPair::tabulate(const IrrepParams& p, long long lo,
                                          long long hi) {
  if (p.discrete() && lo < p.n)
    throw Error(ErrorCode::IndexOutOfRange, "homogeneous: window below discrete start");
  HomogeneousPair h;
  h.params = p;
  h.lo = lo;
  std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  h.g0.assign(width, LogComplex::zero());
  h.g1.assign(width, LogComplex::zero());

  auto put = [&](std::vector<LogComplex>& g, long long k, const LogComplex& v) {
    if (k >= lo && k <= hi) g[static_cast<std::size_t>(k - lo)] = v;
  };
  auto fill = [&](std::vector<LogComplex>& g, long long seed_index) {
    LogComplex v = LogComplex::one();
    put(g, seed_index, v);
    // upward: g(c+1) = g(c-1) * b_plus(c-1)/b_minus(c+1)
    LogComplex up = v;
    for (long long c = seed_index + 1; c + 1 <= hi; c += 2) {
      up *= LogComplex::from(b_plus(p, c - 1)) / LogComplex::from(b_minus(p, c + 1));
      put(g, c + 1, up);
    }
    // downward: g(c-1) = g(c+1) * b_minus(c+1)/b_plus(c-1)
    if (!p.discrete()) {
      LogComplex down = v;
      for (long long c = seed_index - 1; c - 1 >= lo; c -= 2) {
        down *= LogComplex::from(b_minus(p, c + 1)) / LogComplex::from(b_plus(p, c - 1));
        put(g, c - 1, down);
      }
    }
  };
  fill(h.g0, p.i_nu);
  fill(h.g1, p.i_nu + 1);
  return h;
}

Complex green(const IrrepParams& p, long long k, long long l) {
  if (p.discrete())
    throw Error(ErrorCode::BadInput, "green: defined for the non-discrete series");
  long long lo = std::min(k, l);
  long long hi = std::max(k, l + 1);
  HomogeneousPair h = HomogeneousPair::tabulate(p, lo, hi);

  bool l_even_chain = ((l - p.i_nu) % 2 + 2) % 2 == 0;
  bool k_even_chain = ((k - p.i_nu) % 2 + 2) % 2 == 0;
  if (l_even_chain == k_even_chain) return Complex(0.0, 0.0);  // repeated-parity row

  // The determinants collapse along the parity support of g0/g1; the shared
  // row factor cancels exactly.
  const LogComplex& num = k_even_chain ? h.g0_at(k) : h.g1_at(k);
  const LogComplex& den = k_even_chain ? h.g0_at(l + 1) : h.g1_at(l + 1);
  if (den.is_zero() || den.log_mag < std::log(1e-300))
    throw Error(ErrorCode::DegenerateWronskian, "green: vanishing denominator");
  return (num / den).value();
}

double difference_rhs_check(const IrrepParams& p, const CoeffTensor& g,
                            const CoeffTensor& f) {
  if (g.d() != 1 || f.d() != 1)
    throw Error(ErrorCode::BadInput, "difference_rhs_check: one-factor tensors only");
  if (!(g.params().factors == f.params().factors) || !(g.params().factor(1) == p))
    throw Error(ErrorCode::BadInput, "difference_rhs_check: parameter mismatch");

  const AxisWindow& gw = g.window().axes[0];
  double worst = 0.0;
  for (long long k = gw.lo; k <= gw.hi; ++k) {
    bool bottom = p.discrete() && k == p.n && gw.lo == p.n && k + 1 <= gw.hi;
    bool interior = k - 1 >= gw.lo && k + 1 <= gw.hi;
    if (!bottom && !interior) continue;
    Complex r = -f.at({k});
    if (!bottom) r += b_plus(p, k - 1) * g.at({k - 1});
    if (k + 1 <= gw.hi) r -= b_minus(p, k + 1) * g.at({k + 1});
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

}  // namespace cohom
