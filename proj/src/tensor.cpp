#include "cohom/tensor.hpp"

#include <algorithm>
#include <cmath>

#include "cohom/errors.hpp"

namespace cohom {

std::size_t Window::size() const {
  std::size_t n = 1;
  for (const auto& ax : axes) {
    if (ax.width() <= 0) return 0;
    n *= static_cast<std::size_t>(ax.width());
  }
  return n;
}

bool Window::contains(const std::vector<long long>& k) const {
  if (k.size() != axes.size()) return false;
  for (std::size_t a = 0; a < axes.size(); ++a)
    if (!axes[a].contains(k[a])) return false;
  return true;
}

std::size_t Window::linear(const std::vector<long long>& k) const {
  std::size_t idx = 0;
  for (std::size_t a = 0; a < axes.size(); ++a)
    idx = idx * static_cast<std::size_t>(axes[a].width()) +
          static_cast<std::size_t>(k[a] - axes[a].lo);
  return idx;
}

Window Window::hull(const Window& a, const Window& b) {
  if (a.d() != b.d()) throw Error(ErrorCode::BadInput, "window hull: rank mismatch");
  Window out;
  out.axes.resize(a.axes.size());
  for (std::size_t i = 0; i < a.axes.size(); ++i)
    out.axes[i] = {std::min(a.axes[i].lo, b.axes[i].lo),
                   std::max(a.axes[i].hi, b.axes[i].hi)};
  return out;
}

Window Window::interior(const TensorParams& params, int margin) const {
  Window out = *this;
  for (int a = 0; a < d(); ++a) {
    const IrrepParams& p = params.factors[static_cast<std::size_t>(a)];
    bool bottom_is_start = p.discrete() && axes[static_cast<std::size_t>(a)].lo == p.n;
    if (!bottom_is_start) out.axes[static_cast<std::size_t>(a)].lo += margin;
    out.axes[static_cast<std::size_t>(a)].hi -= margin;
  }
  return out;
}

Window symmetric_window(const TensorParams& params, long long radius) {
  Window w;
  for (const auto& p : params.factors) {
    if (p.discrete())
      w.axes.push_back({p.n, p.n + 2 * radius});
    else
      w.axes.push_back({-radius, radius});
  }
  return w;
}

CoeffTensor::CoeffTensor(TensorParams params, Window window)
    : params_(std::move(params)), window_(std::move(window)) {
  if (params_.d() < 1) throw Error(ErrorCode::BadInput, "tensor needs d >= 1 factors");
  if (window_.d() != params_.d())
    throw Error(ErrorCode::BadInput, "window rank must match factor count");
  for (int a = 1; a <= params_.d(); ++a) {
    const auto& p = params_.factor(a);
    const auto& ax = window_.axes[static_cast<std::size_t>(a - 1)];
    if (ax.width() < 1) throw Error(ErrorCode::BadInput, "empty window axis");
    if (p.discrete() && ax.lo < p.n)
      throw Error(ErrorCode::IndexOutOfRange, "window reaches below discrete start");
  }
  coeffs_.assign(window_.size(), Complex(0.0, 0.0));
}

CoeffTensor CoeffTensor::embedded(const Window& window) const {
  CoeffTensor out(params_, window);
  for_each_index(window_, [&](const std::vector<long long>& k) {
    out.coeffs_[window.linear(k)] = coeffs_[window_.linear(k)];
  });
  return out;
}

CoeffTensor CoeffTensor::restricted(const Window& window) const {
  CoeffTensor out(params_, window);
  for_each_index(window, [&](const std::vector<long long>& k) {
    out.coeffs_[window.linear(k)] = at(k);
  });
  return out;
}

CoeffTensor CoeffTensor::transposed(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != d())
    throw Error(ErrorCode::BadInput, "transpose: bad permutation size");
  TensorParams tp;
  Window w;
  for (int axis : perm) {
    tp.factors.push_back(params_.factor(axis));
    w.axes.push_back(window_.axes[static_cast<std::size_t>(axis - 1)]);
  }
  CoeffTensor out(tp, w);
  std::vector<long long> src(static_cast<std::size_t>(d()));
  for_each_index(w, [&](const std::vector<long long>& k) {
    for (int i = 0; i < d(); ++i)
      src[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)] = k[static_cast<std::size_t>(i)];
    out.coeffs_[w.linear(k)] = coeffs_[window_.linear(src)];
  });
  return out;
}

namespace {

void check_same_params(const CoeffTensor& a, const CoeffTensor& b) {
  if (!(a.params().factors == b.params().factors))
    throw Error(ErrorCode::BadInput, "tensor arithmetic: parameter mismatch");
}

}  // namespace

CoeffTensor operator+(const CoeffTensor& a, const CoeffTensor& b) {
  check_same_params(a, b);
  Window w = Window::hull(a.window(), b.window());
  CoeffTensor out(a.params(), w);
  for_each_index(w, [&](const std::vector<long long>& k) {
    out.ref(k) = a.at(k) + b.at(k);
  });
  return out;
}

CoeffTensor operator-(const CoeffTensor& a, const CoeffTensor& b) {
  check_same_params(a, b);
  Window w = Window::hull(a.window(), b.window());
  CoeffTensor out(a.params(), w);
  for_each_index(w, [&](const std::vector<long long>& k) {
    out.ref(k) = a.at(k) - b.at(k);
  });
  return out;
}

CoeffTensor operator*(Complex s, const CoeffTensor& a) {
  CoeffTensor out = a;
  for (auto& c : out.coeffs()) c *= s;
  return out;
}

double sobolev_weight(const TensorParams& params, const std::vector<long long>& k,
                      double tau) {
  double base = 1.0;
  for (int a = 0; a < params.d(); ++a) {
    const IrrepParams& p = params.factors[static_cast<std::size_t>(a)];
    double kk = static_cast<double>(k[static_cast<std::size_t>(a)]) + 0.5 * p.epsilon;
    base += p.mu + 2.0 * kk * kk;
  }
  if (tau == 0.0) return 1.0;
  return std::pow(base, tau);
}

namespace {

// Per-axis tables of log ||u_k||^2 over the window.
std::vector<std::vector<double>> norm_tables(const TensorParams& params,
                                             const Window& w) {
  std::vector<std::vector<double>> t;
  t.reserve(static_cast<std::size_t>(params.d()));
  for (int a = 0; a < params.d(); ++a)
    t.push_back(basis_log_norm_sq_table(params.factors[static_cast<std::size_t>(a)],
                                        w.axes[static_cast<std::size_t>(a)].lo,
                                        w.axes[static_cast<std::size_t>(a)].hi));
  return t;
}

}  // namespace

double sobolev_norm(const CoeffTensor& f, double tau) {
  auto tables = norm_tables(f.params(), f.window());
  double sum = 0.0;
  const Window& w = f.window();
  for_each_index(w, [&](const std::vector<long long>& k) {
    Complex c = f.coeffs()[w.linear(k)];
    double a2 = std::norm(c);
    if (a2 == 0.0) return;
    double logn = 0.0;
    for (int a = 0; a < w.d(); ++a)
      logn += tables[static_cast<std::size_t>(a)]
                    [static_cast<std::size_t>(k[static_cast<std::size_t>(a)] -
                                              w.axes[static_cast<std::size_t>(a)].lo)];
    sum += sobolev_weight(f.params(), k, tau) * a2 * std::exp(logn);
  });
  return std::sqrt(sum);
}

Complex inner0(const CoeffTensor& f, const CoeffTensor& g) {
  check_same_params(f, g);
  auto tables = norm_tables(f.params(), f.window());
  Complex sum(0.0, 0.0);
  const Window& w = f.window();
  for_each_index(w, [&](const std::vector<long long>& k) {
    Complex a = f.coeffs()[w.linear(k)];
    Complex b = g.at(k);
    if (a == Complex(0.0, 0.0) || b == Complex(0.0, 0.0)) return;
    double logn = 0.0;
    for (int ax = 0; ax < w.d(); ++ax)
      logn += tables[static_cast<std::size_t>(ax)]
                    [static_cast<std::size_t>(k[static_cast<std::size_t>(ax)] -
                                              w.axes[static_cast<std::size_t>(ax)].lo)];
    sum += a * std::conj(b) * std::exp(logn);
  });
  return sum;
}

CoeffTensor apply_X(const CoeffTensor& f, int axis) {
  if (axis < 1 || axis > f.d())
    throw Error(ErrorCode::BadInput, "apply_X: axis out of range");
  const IrrepParams& p = f.params().factor(axis);
  Window w = f.window();
  AxisWindow& ax = w.axes[static_cast<std::size_t>(axis - 1)];
  ax.hi += 1;
  ax.lo = p.discrete() ? std::max<long long>(ax.lo - 1, p.n) : ax.lo - 1;

  CoeffTensor out(f.params(), w);
  std::vector<long long> kk;
  for_each_index(w, [&](const std::vector<long long>& k) {
    kk = k;
    long long ka = k[static_cast<std::size_t>(axis - 1)];
    Complex v(0.0, 0.0);
    kk[static_cast<std::size_t>(axis - 1)] = ka - 1;
    if (f.window().contains(kk)) v += b_plus(p, ka - 1) * f.coeffs()[f.window().linear(kk)];
    kk[static_cast<std::size_t>(axis - 1)] = ka + 1;
    if (f.window().contains(kk)) v -= b_minus(p, ka + 1) * f.coeffs()[f.window().linear(kk)];
    out.ref(k) = v;
  });
  return out;
}

namespace {

CoeffTensor project_one(const CoeffTensor& f, int axis, long long index) {
  if (axis < 1 || axis > f.d())
    throw Error(ErrorCode::IndexOutOfRange, "project: axis out of range");
  if (f.d() == 1)
    throw Error(ErrorCode::BadInput, "project: cannot fix every axis");
  const AxisWindow& ax = f.window().axes[static_cast<std::size_t>(axis - 1)];
  if (!ax.contains(index))
    throw Error(ErrorCode::IndexOutOfRange, "project: index outside window");

  const IrrepParams& p = f.params().factor(axis);
  double scale = std::sqrt(basis_norm_sq(p, index));

  TensorParams tp;
  Window w;
  for (int a = 1; a <= f.d(); ++a) {
    if (a == axis) continue;
    tp.factors.push_back(f.params().factor(a));
    w.axes.push_back(f.window().axes[static_cast<std::size_t>(a - 1)]);
  }
  CoeffTensor out(tp, w);
  std::vector<long long> src(static_cast<std::size_t>(f.d()));
  for_each_index(w, [&](const std::vector<long long>& k) {
    int j = 0;
    for (int a = 1; a <= f.d(); ++a) {
      if (a == axis) {
        src[static_cast<std::size_t>(a - 1)] = index;
      } else {
        src[static_cast<std::size_t>(a - 1)] = k[static_cast<std::size_t>(j)];
        ++j;
      }
    }
    out.ref(k) = scale * f.coeffs()[f.window().linear(src)];
  });
  return out;
}

}  // namespace

CoeffTensor project(const CoeffTensor& f, const std::map<int, long long>& fixed) {
  if (fixed.empty()) return f;
  CoeffTensor cur = f;
  // Ascending axis order; each fix renumbers the axes above it.
  int removed_below = 0;
  for (const auto& [axis, index] : fixed) {
    cur = project_one(cur, axis - removed_below, index);
    ++removed_below;
  }
  return cur;
}

}  // namespace cohom
