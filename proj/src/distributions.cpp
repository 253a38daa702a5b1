#include "cohom/distributions.hpp"

#include <cmath>
#include <cstdio>

#include "cohom/errors.hpp"

namespace cohom {

std::string InvariantDistribution::sigma_string() const {
  std::string s;
  for (int v : sigma) s += static_cast<char>('0' + v);
  return s;
}

namespace {

LogComplex d_walk(const IrrepParams& p, int sigma, long long k) {
  long long anchor = p.i_nu + sigma;
  if (((k - anchor) % 2 + 2) % 2 != 0) return LogComplex::zero();
  LogComplex v = LogComplex::one();
  if (k >= anchor) {
    for (long long c = anchor + 1; c < k; c += 2) v *= LogComplex::from(beta(p, c));
  } else {
    for (long long c = anchor - 1; c > k; c -= 2) v /= LogComplex::from(beta(p, c));
  }
  return v;
}

}  // namespace

LogComplex d_value_formal(const IrrepParams& p, int sigma, long long k) {
  if (sigma != 0 && sigma != 1)
    throw Error(ErrorCode::BadInput, "d_value: sigma must be 0 or 1");
  if (!p.index_valid(k))
    throw Error(ErrorCode::IndexOutOfRange, "d_value: k below discrete start");
  return d_walk(p, sigma, k);
}

LogComplex d_value(const IrrepParams& p, int sigma, long long k) {
  if (sigma == 1 && p.discrete())
    throw Error(ErrorCode::NotInvariant,
                "sigma = 1 is not invariant on a discrete factor");
  return d_value_formal(p, sigma, k);
}

std::vector<LogComplex> d_table(const IrrepParams& p, int sigma, long long lo,
                                long long hi) {
  if (hi < lo) return {};
  std::vector<LogComplex> out(static_cast<std::size_t>(hi - lo + 1), LogComplex::zero());
  long long anchor = p.i_nu + sigma;
  auto put = [&](long long k, const LogComplex& v) {
    if (k >= lo && k <= hi) out[static_cast<std::size_t>(k - lo)] = v;
  };
  // ascending from the anchor
  LogComplex v = LogComplex::one();
  put(anchor, v);
  for (long long c = anchor + 1; c + 1 <= hi; c += 2) {
    v *= LogComplex::from(beta(p, c));
    put(c + 1, v);
  }
  // descending (no indices below the start for discrete factors)
  if (!p.discrete()) {
    v = LogComplex::one();
    for (long long c = anchor - 1; c - 1 >= lo; c -= 2) {
      v /= LogComplex::from(beta(p, c));
      put(c - 1, v);
    }
  }
  return out;
}

Complex eval(const InvariantDistribution& D, const CoeffTensor& f) {
  if (!(D.params.factors == f.params().factors))
    throw Error(ErrorCode::BadInput, "eval: parameter mismatch");
  const Window& w = f.window();
  std::vector<std::vector<Complex>> tables;
  for (int a = 0; a < f.d(); ++a) {
    auto t = d_table(f.params().factors[static_cast<std::size_t>(a)],
                     D.sigma[static_cast<std::size_t>(a)],
                     w.axes[static_cast<std::size_t>(a)].lo,
                     w.axes[static_cast<std::size_t>(a)].hi);
    std::vector<Complex> vals(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) vals[i] = t[i].value();
    tables.push_back(std::move(vals));
  }
  Complex sum(0.0, 0.0);
  for_each_index(w, [&](const std::vector<long long>& k) {
    Complex c = f.coeffs()[w.linear(k)];
    if (c == Complex(0.0, 0.0)) return;
    Complex dv(1.0, 0.0);
    for (int a = 0; a < f.d(); ++a) {
      dv *= tables[static_cast<std::size_t>(a)]
                  [static_cast<std::size_t>(k[static_cast<std::size_t>(a)] -
                                            w.axes[static_cast<std::size_t>(a)].lo)];
      if (dv == Complex(0.0, 0.0)) break;
    }
    sum += c * dv;
  });
  return sum;
}

std::vector<InvariantDistribution> basis_of_distributions(const TensorParams& params) {
  std::vector<int> free_axes;
  for (int a = 0; a < params.d(); ++a)
    if (!params.factors[static_cast<std::size_t>(a)].discrete()) free_axes.push_back(a);
  std::size_t count = static_cast<std::size_t>(1) << free_axes.size();
  std::vector<InvariantDistribution> out;
  out.reserve(count);
  for (std::size_t bits = 0; bits < count; ++bits) {
    InvariantDistribution D;
    D.params = params;
    D.sigma.assign(static_cast<std::size_t>(params.d()), 0);
    for (std::size_t j = 0; j < free_axes.size(); ++j) {
      // sigma_1 most significant
      std::size_t shift = free_axes.size() - 1 - j;
      D.sigma[static_cast<std::size_t>(free_axes[j])] =
          static_cast<int>((bits >> shift) & 1u);
    }
    out.push_back(std::move(D));
  }
  return out;
}

std::vector<Complex> kernel_defect(const CoeffTensor& f) {
  std::vector<Complex> out;
  for (const auto& D : basis_of_distributions(f.params())) out.push_back(eval(D, f));
  return out;
}

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

std::string kernel_defect_csv(const TensorParams& params,
                              const std::vector<Complex>& defects) {
  auto basis = basis_of_distributions(params);
  std::string out = "sigma,re,im,magnitude\n";
  char buf[128];
  for (std::size_t i = 0; i < basis.size() && i < defects.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g,%.17g\n",
                  basis[i].sigma_string().c_str(), defects[i].real(),
                  defects[i].imag(), std::abs(defects[i]));
    out += buf;
  }
  return out;
}

}  // namespace cohom
