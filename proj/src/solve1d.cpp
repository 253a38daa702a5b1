#include "cohom/solve1d.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "cohom/distributions.hpp"
#include "cohom/errors.hpp"
#include "cohom/homogeneous.hpp"

namespace cohom {

Backend backend_from_name(const std::string& name) {
  if (name == "formula") return Backend::Formula;
  if (name == "lsq") return Backend::Lsq;
  throw Error(ErrorCode::BadInput, "unknown backend '" + name + "'");
}

namespace {

void gate_kernel_defect(const CoeffTensor& f, const SolveOptions& opts) {
  double scale = std::max(norm0(f), opts.defect_scale);
  if (scale == 0.0) return;
  auto defects = kernel_defect(f);
  double worst = max_abs(defects);
  if (worst > opts.tol * scale) {
    std::ostringstream os;
    os << "kernel defect " << worst << " exceeds " << opts.tol << " * " << scale;
    throw Error(ErrorCode::PreconditionDefect, os.str());
  }
}

void check_finite(const CoeffTensor& g) {
  for (const auto& c : g.coeffs())
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(ErrorCode::NonConvergent,
                  "tail sums failed to stabilize within the window");
}

// Tail-sum solver in the non-discrete series. With D the invariant
// distributions of the factor,
//   g(k) even-chain:  g0(k)/b_plus(i_nu) * sum_{l > k, odd chain} f(l) D1(u_l)
//   g(k) odd-chain:   g1(k)/b_minus(i_nu+1) * sum_{l > k, even chain} f(l) D0(u_l)
// The weights 1/(g b_minus) of the one-sided formal solution and these
// D-values satisfy the same two-step ratio recurrence and agree at the
// anchor, so the two representations coincide on ker D.
CoeffTensor solve_formula_nondiscrete(const CoeffTensor& f) {
  const IrrepParams& p = f.params().factor(1);
  const AxisWindow& w = f.window().axes[0];
  HomogeneousPair h = HomogeneousPair::tabulate(p, w.lo, w.hi);
  auto d0 = d_table(p, 0, w.lo, w.hi);
  auto d1 = d_table(p, 1, w.lo, w.hi);

  std::size_t width = static_cast<std::size_t>(w.width());
  // suffix sums over each parity chain: tail[k] = sum_{l >= k} f(l) D(u_l)
  std::vector<Complex> tail(width + 2, Complex(0.0, 0.0));
  for (long long k = w.hi; k >= w.lo; --k) {
    std::size_t i = static_cast<std::size_t>(k - w.lo);
    bool even_chain = ((k - p.i_nu) % 2 + 2) % 2 == 0;
    const auto& dt = even_chain ? d0 : d1;
    Complex term = f.coeffs()[i] * dt[i].value();
    tail[i] = term + (i + 2 < tail.size() ? tail[i + 2] : Complex(0.0, 0.0));
  }
  auto tail_at = [&](long long k) {
    if (k > w.hi) return Complex(0.0, 0.0);
    long long kk = std::max(k, w.lo);
    if ((kk - k) % 2 != 0) ++kk;  // stay on the requested parity chain
    return tail[static_cast<std::size_t>(kk - w.lo)];
  };

  Complex c_even = b_plus(p, p.i_nu);       // anchors of the weight recurrences
  Complex c_odd = b_minus(p, p.i_nu + 1);
  CoeffTensor g(f.params(), f.window());
  for (long long k = w.lo; k <= w.hi; ++k) {
    std::size_t i = static_cast<std::size_t>(k - w.lo);
    bool even_chain = ((k - p.i_nu) % 2 + 2) % 2 == 0;
    Complex hom = even_chain ? h.g0_at(k).value() : h.g1_at(k).value();
    Complex anchor = even_chain ? c_even : c_odd;
    g.coeffs()[i] = hom / anchor * tail_at(k + 1);
  }
  return g;
}

// Discrete series: split f into even/odd chains and use the tail formulas
//   g(n+2k+1) = g1(n+2k+1)/b_minus(n+1) * sum_{i>k} f(n+2i) D0(u_{n+2i})
//   g(n+2k)   = g0(n+2k)/b_plus(n)      * sum_{i>k} f(n+2i-1) D1(u_{n+2i-1})
// where the odd-chain weights D1 are the formal products (D1 itself is not
// invariant here, but the weight recurrence is the same).
CoeffTensor solve_formula_discrete(const CoeffTensor& f) {
  const IrrepParams& p = f.params().factor(1);
  const AxisWindow& w = f.window().axes[0];
  HomogeneousPair h = HomogeneousPair::tabulate(p, w.lo, w.hi);
  auto d0 = d_table(p, 0, w.lo, w.hi);
  std::vector<LogComplex> d1(static_cast<std::size_t>(w.width()));
  for (long long k = w.lo; k <= w.hi; ++k)
    d1[static_cast<std::size_t>(k - w.lo)] = d_value_formal(p, 1, k);

  std::size_t width = static_cast<std::size_t>(w.width());
  std::vector<Complex> tail(width + 2, Complex(0.0, 0.0));
  for (long long k = w.hi; k >= w.lo; --k) {
    std::size_t i = static_cast<std::size_t>(k - w.lo);
    bool even_chain = (k - p.n) % 2 == 0;
    const auto& dt = even_chain ? d0 : d1;
    Complex term = f.coeffs()[i] * dt[i].value();
    tail[i] = term + (i + 2 < tail.size() ? tail[i + 2] : Complex(0.0, 0.0));
  }
  auto tail_at = [&](long long k) {
    if (k > w.hi) return Complex(0.0, 0.0);
    long long kk = std::max(k, w.lo);
    if ((kk - k) % 2 != 0) ++kk;
    return tail[static_cast<std::size_t>(kk - w.lo)];
  };

  Complex c_even = b_plus(p, p.n);      // prefactor anchor for the odd-f part
  Complex c_odd = b_minus(p, p.n + 1);  // prefactor anchor for the even-f part
  CoeffTensor g(f.params(), f.window());
  for (long long k = w.lo; k <= w.hi; ++k) {
    std::size_t i = static_cast<std::size_t>(k - w.lo);
    bool even_chain = (k - p.n) % 2 == 0;
    Complex hom = even_chain ? h.g0_at(k).value() : h.g1_at(k).value();
    Complex anchor = even_chain ? c_even : c_odd;
    g.coeffs()[i] = hom / anchor * tail_at(k + 1);
  }
  return g;
}

// Banded interior rows of the difference operator over the window, plus the
// exact bottom row for a discrete window starting at n. Minimum-norm least
// squares via a complete orthogonal decomposition.
CoeffTensor solve_lsq(const CoeffTensor& f) {
  const IrrepParams& p = f.params().factor(1);
  const AxisWindow& w = f.window().axes[0];
  long long width = w.width();
  bool bottom = p.discrete() && w.lo == p.n;
  long long rows = std::max<long long>(0, width - 2) + (bottom ? 1 : 0);
  if (rows == 0) return CoeffTensor(f.params(), f.window());

  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(rows, width);
  Eigen::VectorXcd rhs(rows);
  long long r = 0;
  if (bottom) {
    T(r, 1) = -b_minus(p, p.n + 1);
    rhs(r) = f.at({p.n});
    ++r;
  }
  for (long long k = w.lo + 1; k + 1 <= w.hi; ++k, ++r) {
    T(r, k - 1 - w.lo) = b_plus(p, k - 1);
    T(r, k + 1 - w.lo) = -b_minus(p, k + 1);
    rhs(r) = f.at({k});
  }
  Eigen::VectorXcd sol = T.completeOrthogonalDecomposition().solve(rhs);
  CoeffTensor g(f.params(), f.window());
  for (long long k = w.lo; k <= w.hi; ++k)
    g.coeffs()[static_cast<std::size_t>(k - w.lo)] = sol(k - w.lo);
  return g;
}

}  // namespace

CoeffTensor solve_1d(const CoeffTensor& f, const SolveOptions& opts) {
  if (f.d() != 1) throw Error(ErrorCode::BadInput, "solve_1d: one factor expected");
  gate_kernel_defect(f, opts);
  const IrrepParams& p = f.params().factor(1);
  CoeffTensor g = opts.backend == Backend::Lsq
                      ? solve_lsq(f)
                      : (p.discrete() ? solve_formula_discrete(f)
                                      : solve_formula_nondiscrete(f));
  check_finite(g);
  return g;
}

CoeffTensor project_out_homogeneous(const CoeffTensor& g) {
  if (g.d() != 1) throw Error(ErrorCode::BadInput, "one factor expected");
  const IrrepParams& p = g.params().factor(1);
  const AxisWindow& w = g.window().axes[0];
  HomogeneousPair h = HomogeneousPair::tabulate(p, w.lo, w.hi);

  CoeffTensor out = g;
  auto subtract = [&](const std::vector<LogComplex>& hom) {
    // g0 and g1 live on disjoint parity chains, so plain Gram steps suffice.
    Complex dot(0.0, 0.0);
    double nrm2 = 0.0;
    for (std::size_t i = 0; i < hom.size(); ++i) {
      Complex hv = hom[i].value();
      dot += out.coeffs()[i] * std::conj(hv);
      nrm2 += std::norm(hv);
    }
    if (nrm2 == 0.0) return;
    Complex coef = dot / nrm2;
    for (std::size_t i = 0; i < hom.size(); ++i)
      out.coeffs()[i] -= coef * hom[i].value();
  };
  subtract(h.g0);
  if (!p.discrete()) subtract(h.g1);
  return out;
}

}  // namespace cohom
