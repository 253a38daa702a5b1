#include "cohom/split.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "cohom/errors.hpp"

namespace cohom {

namespace {

std::string join_indices(const std::vector<long long>& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(k[i]);
  }
  return s;
}

}  // namespace

double SplitWeight::value(const TensorParams& bold,
                          const std::vector<long long>& offsets) const {
  double v = 1.0;
  for (int a = 0; a < bold.d(); ++a) {
    const IrrepParams& p = bold.factors[static_cast<std::size_t>(a)];
    long long l = offsets[static_cast<std::size_t>(a)];
    double norm = p.discrete() ? (1.0 - ratio) : (1.0 - ratio) / (1.0 + ratio);
    v *= norm * std::pow(ratio, static_cast<double>(l < 0 ? -l : l));
  }
  return v;
}

SplitResult split(const CoeffTensor& f, const SplitWeight& w) {
  if (f.d() < 2)
    throw Error(ErrorCode::BadInput, "split needs at least two factors");
  if (!(w.ratio > 0.0 && w.ratio < 1.0))
    throw Error(ErrorCode::BadInput, "split ratio must lie in (0,1)");

  TensorParams bold;
  for (int a = 2; a <= f.d(); ++a) bold.factors.push_back(f.params().factor(a));
  int db = bold.d();

  const Window& fw = f.window();
  const AxisWindow& ax1 = fw.axes[0];

  SplitResult out{CoeffTensor(f.params(), fw), CoeffTensor(f.params(), fw), {}};

  // Parity classes n in S(mu_bold); off-class coefficients of f1 stay zero.
  for (const auto& D : basis_of_distributions(bold)) {
    // Per-axis D tables and the offset grids of this parity class.
    std::vector<std::vector<Complex>> dvals(static_cast<std::size_t>(db));
    std::vector<std::vector<long long>> grid(static_cast<std::size_t>(db));
    for (int a = 0; a < db; ++a) {
      const IrrepParams& p = bold.factors[static_cast<std::size_t>(a)];
      const AxisWindow& ax = fw.axes[static_cast<std::size_t>(a + 1)];
      auto table = d_table(p, D.sigma[static_cast<std::size_t>(a)], ax.lo, ax.hi);
      for (long long k = ax.lo; k <= ax.hi; ++k) {
        if (((k - p.i_nu - D.sigma[static_cast<std::size_t>(a)]) % 2 + 2) % 2 != 0)
          continue;
        grid[static_cast<std::size_t>(a)].push_back(k);
        dvals[static_cast<std::size_t>(a)].push_back(
            table[static_cast<std::size_t>(k - ax.lo)].value());
      }
    }

    // Iterate the parity grid: j is a vector of positions into grid[a].
    std::vector<std::size_t> pos(static_cast<std::size_t>(db), 0);
    std::vector<long long> idx(static_cast<std::size_t>(f.d()));
    bool empty = false;
    for (int a = 0; a < db; ++a) empty = empty || grid[static_cast<std::size_t>(a)].empty();
    if (empty) continue;

    std::vector<std::vector<long long>> points;
    std::vector<Complex> point_d;
    for (;;) {
      std::vector<long long> kk(static_cast<std::size_t>(db));
      Complex dv(1.0, 0.0);
      for (int a = 0; a < db; ++a) {
        kk[static_cast<std::size_t>(a)] = grid[static_cast<std::size_t>(a)][pos[static_cast<std::size_t>(a)]];
        dv *= dvals[static_cast<std::size_t>(a)][pos[static_cast<std::size_t>(a)]];
      }
      points.push_back(std::move(kk));
      point_d.push_back(dv);
      int a = db - 1;
      for (; a >= 0; --a) {
        if (++pos[static_cast<std::size_t>(a)] < grid[static_cast<std::size_t>(a)].size()) break;
        pos[static_cast<std::size_t>(a)] = 0;
      }
      if (a < 0) break;
    }

    // Per-point m-weight and boundary flag (independent of the axis-1 index).
    // The geometric profile is renormalized over the windowed class grid, so
    // the resulting finite-support weight has total mass exactly 1 and the
    // complementary part's fiber kernels telescope to rounding level.
    std::vector<double> point_m(points.size());
    std::vector<char> point_edge(points.size());
    std::vector<long long> offsets(static_cast<std::size_t>(db));
    double mass = 0.0;
    for (std::size_t t = 0; t < points.size(); ++t) {
      bool edge = false;
      for (int a = 0; a < db; ++a) {
        const IrrepParams& p = bold.factors[static_cast<std::size_t>(a)];
        const AxisWindow& ax = fw.axes[static_cast<std::size_t>(a + 1)];
        long long kk = points[t][static_cast<std::size_t>(a)];
        offsets[static_cast<std::size_t>(a)] =
            (kk - p.i_nu - D.sigma[static_cast<std::size_t>(a)]) / 2;
        edge = edge || kk <= ax.lo + 1 || kk >= ax.hi - 1;
      }
      point_m[t] = w.value(bold, offsets);
      point_edge[t] = edge ? 1 : 0;
      mass += point_m[t];
    }
    for (auto& m : point_m) m /= mass;

    double edge_mass = 0.0;
    for (long long k1 = ax1.lo; k1 <= ax1.hi; ++k1) {
      // inner sum over the class: sum_j f(k1, j) D(v_j), lexicographic order
      Complex inner(0.0, 0.0);
      idx[0] = k1;
      for (std::size_t t = 0; t < points.size(); ++t) {
        for (int a = 0; a < db; ++a) idx[static_cast<std::size_t>(a + 1)] = points[t][static_cast<std::size_t>(a)];
        inner += f.coeffs()[fw.linear(idx)] * point_d[t];
      }
      if (inner == Complex(0.0, 0.0)) continue;
      for (std::size_t t = 0; t < points.size(); ++t) {
        for (int a = 0; a < db; ++a) idx[static_cast<std::size_t>(a + 1)] = points[t][static_cast<std::size_t>(a)];
        Complex v = point_m[t] / point_d[t] * inner;
        out.f1.coeffs()[fw.linear(idx)] = v;
        if (point_edge[t]) edge_mass += std::abs(v);
      }
    }
    out.truncation.push_back(
        {"truncation", "class", D.sigma_string(), edge_mass});
  }

  // exact complement, bitwise f = f1 + fmu
  for (std::size_t i = 0; i < out.fmu.coeffs().size(); ++i)
    out.fmu.coeffs()[i] = f.coeffs()[i] - out.f1.coeffs()[i];
  return out;
}

SplitKernelReport verify_split_kernels(const CoeffTensor& f1, const CoeffTensor& fmu,
                                       double tol) {
  if (!(f1.params().factors == fmu.params().factors) || f1.d() < 2)
    throw Error(ErrorCode::BadInput, "verify_split_kernels: mismatched inputs");
  CoeffTensor f = f1 + fmu;
  double scale = norm0(f);

  SplitKernelReport rep;
  const IrrepParams& p1 = f1.params().factor(1);
  TensorParams first;
  first.factors.push_back(p1);

  // f1 fibers over every bold point must kill the axis-1 distributions.
  Window bold_w;
  for (int a = 2; a <= f1.d(); ++a)
    bold_w.axes.push_back(f1.window().axes[static_cast<std::size_t>(a - 1)]);
  for_each_index(bold_w, [&](const std::vector<long long>& l) {
    std::map<int, long long> fixed;
    for (int a = 0; a < bold_w.d(); ++a) fixed[a + 2] = l[static_cast<std::size_t>(a)];
    CoeffTensor fiber = project(f1, fixed);
    for (int sigma = 0; sigma <= (p1.discrete() ? 0 : 1); ++sigma) {
      InvariantDistribution D{first, {sigma}};
      double v = std::abs(eval(D, fiber));
      rep.worst_f1 = std::max(rep.worst_f1, v);
      rep.rows.push_back({sigma == 0 ? "f1_D0" : "f1_D1", join_indices(l), "", v});
    }
  });

  // fmu fibers over every axis-1 index must kill the bold distributions.
  const AxisWindow& ax1 = f1.window().axes[0];
  for (long long k = ax1.lo; k <= ax1.hi; ++k) {
    CoeffTensor fiber = project(fmu, {{1, k}});
    auto defects = kernel_defect(fiber);
    auto basis = basis_of_distributions(fiber.params());
    for (std::size_t i = 0; i < defects.size(); ++i) {
      double v = std::abs(defects[i]);
      rep.worst_fmu = std::max(rep.worst_fmu, v);
      rep.rows.push_back({"fmu", std::to_string(k), basis[i].sigma_string(), v});
    }
  }

  rep.pass = std::max(rep.worst_f1, rep.worst_fmu) <= tol * scale;
  return rep;
}

std::string split_report_csv(const SplitResult& split_result,
                             const SplitKernelReport& kernels) {
  std::string out = "kind,slice,sigma,value\n";
  char buf[160];
  auto emit = [&](const SplitReportRow& r) {
    std::snprintf(buf, sizeof(buf), "%s,%s,%s,%.17g\n", r.kind.c_str(),
                  r.slice.c_str(), r.sigma.c_str(), r.value);
    out += buf;
  };
  for (const auto& r : kernels.rows) emit(r);
  for (const auto& r : split_result.truncation) emit(r);
  return out;
}

}  // namespace cohom
