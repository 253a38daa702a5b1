#include "cohom/solve_top.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "cohom/errors.hpp"
#include "cohom/homogeneous.hpp"
#include "cohom/parallel.hpp"

namespace cohom {

double sobolev_index(double s, int d) {
  if (d < 1) throw Error(ErrorCode::BadInput, "sobolev_index: d >= 1");
  double v = std::ldexp(s, d - 1);  // 2^{d-1} s
  for (int i = 1; i <= d - 1; ++i)
    v += std::ldexp(2.0 * s + static_cast<double>(d - i), i - 1);
  return v;
}

namespace {

std::string join(const std::vector<long long>& k, const char* prefix) {
  std::string s = prefix;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(k[i]);
  }
  return s;
}

TopResult solve_top_impl(const CoeffTensor& f, const TopOptions& opts,
                         double defect_scale) {
  int d = f.d();
  if (d == 1) {
    SolveOptions s1{opts.tol, opts.backend, defect_scale};
    TopResult r;
    r.g.push_back(solve_1d(f, s1));
    r.rows.push_back({"k", difference_rhs_check(f.params().factor(1), r.g[0], f)});
    return r;
  }

  SplitResult sp = split(f, SplitWeight{opts.split_ratio});

  TopResult out;
  for (int i = 0; i < d; ++i) out.g.emplace_back(f.params(), f.window());

  const Window& fw = f.window();
  TensorParams first;
  first.factors.push_back(f.params().factor(1));
  Window bold_w;
  for (int a = 2; a <= d; ++a) bold_w.axes.push_back(fw.axes[static_cast<std::size_t>(a - 1)]);

  // axis-1 fiber solves over every bold point
  std::vector<std::vector<long long>> bold_points;
  for_each_index(bold_w, [&](const std::vector<long long>& l) { bold_points.push_back(l); });

  std::vector<std::vector<Complex>> fiber_g(bold_points.size());
  std::vector<double> fiber_res(bold_points.size(), 0.0);
  std::vector<std::string> fiber_err(bold_points.size());
  std::vector<ErrorCode> fiber_code(bold_points.size(), ErrorCode::PreconditionDefect);
  parallel_for(bold_points.size(), opts.threads, [&](std::size_t t) {
    const auto& l = bold_points[t];
    std::map<int, long long> fixed;
    for (int a = 0; a < bold_w.d(); ++a) fixed[a + 2] = l[static_cast<std::size_t>(a)];
    CoeffTensor fiber = project(sp.f1, fixed);
    if (norm0(fiber) == 0.0) return;  // off-class or empty fiber
    SolveOptions s1{opts.tol, opts.backend, defect_scale};
    try {
      CoeffTensor g = solve_1d(fiber, s1);
      fiber_res[t] = difference_rhs_check(f.params().factor(1), g, fiber);
      fiber_g[t].assign(g.coeffs().begin(), g.coeffs().end());
    } catch (const Error& e) {
      fiber_err[t] = std::string("slice ") + join(l, "l=") + ": " + e.what();
      fiber_code[t] = e.code();
    }
  });
  for (std::size_t t = 0; t < fiber_err.size(); ++t)
    if (!fiber_err[t].empty()) throw Error(fiber_code[t], fiber_err[t]);

  std::vector<long long> idx(static_cast<std::size_t>(d));
  for (std::size_t t = 0; t < bold_points.size(); ++t) {
    if (fiber_g[t].empty()) continue;
    const auto& l = bold_points[t];
    double vnorm = 1.0;
    for (int a = 0; a < bold_w.d(); ++a)
      vnorm *= std::sqrt(basis_norm_sq(f.params().factor(a + 2), l[static_cast<std::size_t>(a)]));
    for (int a = 0; a < bold_w.d(); ++a) idx[static_cast<std::size_t>(a + 1)] = l[static_cast<std::size_t>(a)];
    const AxisWindow& ax1 = fw.axes[0];
    for (long long k = ax1.lo; k <= ax1.hi; ++k) {
      idx[0] = k;
      out.g[0].ref(idx) = fiber_g[t][static_cast<std::size_t>(k - ax1.lo)] / vnorm;
    }
    out.rows.push_back({join(l, "l="), fiber_res[t]});
  }

  // bold-block recursion over every axis-1 index
  const AxisWindow& ax1 = fw.axes[0];
  std::size_t nk = static_cast<std::size_t>(ax1.width());
  std::vector<TopResult> subs(nk);
  std::vector<char> have(nk, 0);
  std::vector<std::string> sub_err(nk);
  std::vector<ErrorCode> sub_code(nk, ErrorCode::PreconditionDefect);
  parallel_for(nk, opts.threads, [&](std::size_t t) {
    long long k = ax1.lo + static_cast<long long>(t);
    CoeffTensor fiber = project(sp.fmu, {{1, k}});
    if (norm0(fiber) == 0.0) return;
    TopOptions sub = opts;
    sub.axis_order.clear();
    sub.threads = 1;  // nested solves stay serial; outer loop carries the parallelism
    try {
      subs[t] = solve_top_impl(fiber, sub, defect_scale);
      have[t] = 1;
    } catch (const Error& e) {
      sub_err[t] = "slice k=" + std::to_string(k) + ": " + e.what();
      sub_code[t] = e.code();
    }
  });
  for (std::size_t t = 0; t < sub_err.size(); ++t)
    if (!sub_err[t].empty()) throw Error(sub_code[t], sub_err[t]);

  for (std::size_t t = 0; t < nk; ++t) {
    if (!have[t]) continue;
    long long k = ax1.lo + static_cast<long long>(t);
    double unorm = std::sqrt(basis_norm_sq(f.params().factor(1), k));
    idx[0] = k;
    for (int i = 2; i <= d; ++i) {
      const CoeffTensor& h = subs[t].g[static_cast<std::size_t>(i - 2)];
      for_each_index(h.window(), [&](const std::vector<long long>& l) {
        for (int a = 0; a < bold_w.d(); ++a) idx[static_cast<std::size_t>(a + 1)] = l[static_cast<std::size_t>(a)];
        out.g[static_cast<std::size_t>(i - 1)].ref(idx) =
            h.coeffs()[h.window().linear(l)] / unorm;
      });
    }
    for (const auto& row : subs[t].rows)
      out.rows.push_back({"k=" + std::to_string(k) + ";" + row.slice, row.residual});
  }
  return out;
}

}  // namespace

TopResult solve_top(const CoeffTensor& f, const TopOptions& opts) {
  CoeffTensor work = f;
  std::vector<int> order = opts.axis_order;
  if (!order.empty()) {
    if (static_cast<int>(order.size()) != f.d())
      throw Error(ErrorCode::BadInput, "axis order must permute 1..d");
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < f.d(); ++i)
      if (sorted[static_cast<std::size_t>(i)] != i + 1)
        throw Error(ErrorCode::BadInput, "axis order must permute 1..d");
    work = f.transposed(order);
  }

  double scale = std::max(norm0(work), opts.defect_scale);
  auto defects = kernel_defect(work);
  double worst = max_abs(defects);
  if (scale > 0.0 && worst > opts.tol * scale) {
    std::ostringstream os;
    os << "kernel defect " << worst << " exceeds " << opts.tol << " * " << scale;
    throw Error(ErrorCode::PreconditionDefect, os.str());
  }

  TopOptions inner = opts;
  inner.axis_order.clear();
  TopResult r = solve_top_impl(work, inner, scale);

  if (!order.empty()) {
    // undo the permutation: new axis i held old axis order[i-1]
    std::vector<int> inverse(order.size());
    for (int i = 0; i < f.d(); ++i)
      inverse[static_cast<std::size_t>(order[static_cast<std::size_t>(i)] - 1)] = i + 1;
    std::vector<CoeffTensor> g(static_cast<std::size_t>(f.d()));
    for (int i = 0; i < f.d(); ++i)
      g[static_cast<std::size_t>(order[static_cast<std::size_t>(i)] - 1)] =
          r.g[static_cast<std::size_t>(i)].transposed(inverse);
    r.g = std::move(g);
  }
  return r;
}

std::vector<CoeffTensor> solve_top_axes(const CoeffTensor& f,
                                        const std::vector<int>& axes,
                                        const TopOptions& opts) {
  if (axes.empty()) throw Error(ErrorCode::BadInput, "solve_top_axes: no axes");
  std::vector<int> passengers;
  for (int a = 1; a <= f.d(); ++a)
    if (std::find(axes.begin(), axes.end(), a) == axes.end()) passengers.push_back(a);
  if (passengers.empty()) {
    TopResult r = solve_top(f, opts);
    return r.g;
  }

  TensorParams sub_tp;
  Window sub_w;
  for (int a : axes) {
    sub_tp.factors.push_back(f.params().factor(a));
    sub_w.axes.push_back(f.window().axes[static_cast<std::size_t>(a - 1)]);
  }
  Window pass_w;
  for (int a : passengers)
    pass_w.axes.push_back(f.window().axes[static_cast<std::size_t>(a - 1)]);

  std::vector<CoeffTensor> out;
  for (std::size_t i = 0; i < axes.size(); ++i) out.emplace_back(f.params(), f.window());

  std::vector<long long> idx(static_cast<std::size_t>(f.d()));
  for_each_index(pass_w, [&](const std::vector<long long>& pk) {
    for (std::size_t t = 0; t < passengers.size(); ++t)
      idx[static_cast<std::size_t>(passengers[t] - 1)] = pk[t];
    // raw fiber over the acting axes (no norm scaling; linearity makes the
    // scaled and unscaled problems interchangeable)
    CoeffTensor fiber(sub_tp, sub_w);
    for_each_index(sub_w, [&](const std::vector<long long>& sk) {
      for (std::size_t t = 0; t < axes.size(); ++t)
        idx[static_cast<std::size_t>(axes[t] - 1)] = sk[t];
      fiber.ref(sk) = f.coeffs()[f.window().linear(idx)];
    });
    if (norm0(fiber) == 0.0) return;
    TopResult r = solve_top(fiber, opts);
    for (std::size_t i = 0; i < axes.size(); ++i) {
      const CoeffTensor& g = r.g[i];
      for_each_index(sub_w, [&](const std::vector<long long>& sk) {
        for (std::size_t t = 0; t < axes.size(); ++t)
          idx[static_cast<std::size_t>(axes[t] - 1)] = sk[t];
        out[i].ref(idx) = g.at(sk);
      });
    }
  });
  return out;
}

double residual(const CoeffTensor& f, const std::vector<CoeffTensor>& gs) {
  if (static_cast<int>(gs.size()) != f.d())
    throw Error(ErrorCode::BadInput, "residual: one g per generator expected");
  CoeffTensor sum = apply_X(gs[0], 1);
  for (int i = 2; i <= f.d(); ++i) sum = sum + apply_X(gs[static_cast<std::size_t>(i - 1)], i);
  CoeffTensor diff = sum - f;
  Window interior = f.window().interior(f.params(), 1);
  for (const auto& ax : interior.axes)
    if (ax.width() < 1) return 0.0;
  return norm0(diff.restricted(interior));
}

std::string top_report_csv(const std::vector<TopReportRow>& rows) {
  std::string out = "slice,residual\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%.17g\n", r.slice.c_str(), r.residual);
    out += buf;
  }
  return out;
}

}  // namespace cohom
