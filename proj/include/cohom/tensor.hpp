#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cohom/irrep.hpp"
#include "cohom/log_complex.hpp"

namespace cohom {

struct AxisWindow {
  long long lo = 0;
  long long hi = -1;

  long long width() const { return hi - lo + 1; }
  bool contains(long long k) const { return k >= lo && k <= hi; }
  bool operator==(const AxisWindow& o) const { return lo == o.lo && hi == o.hi; }
};

/// Per-axis integer intervals indexing a dense block of coefficients.
struct Window {
  std::vector<AxisWindow> axes;

  int d() const { return static_cast<int>(axes.size()); }
  std::size_t size() const;
  bool contains(const std::vector<long long>& k) const;
  std::size_t linear(const std::vector<long long>& k) const;  // row-major
  bool operator==(const Window& o) const { return axes == o.axes; }

  static Window hull(const Window& a, const Window& b);
  /// Shrink truncation edges by `margin`: both ends of a Z axis, only the
  /// top of a discrete axis whose lo sits at the representation's start.
  Window interior(const TensorParams& params, int margin = 1) const;
};

Window symmetric_window(const TensorParams& params, long long radius);

/// Truncated coefficient tensor over the product basis of d factors.
/// Coefficients are stored row-major over the window; the tensor represents
/// sum f(k) u_{k_1} x ... x u_{k_d} with f = 0 outside the window.
class CoeffTensor {
 public:
  CoeffTensor() = default;
  CoeffTensor(TensorParams params, Window window);

  const TensorParams& params() const { return params_; }
  const Window& window() const { return window_; }
  int d() const { return params_.d(); }
  std::size_t size() const { return coeffs_.size(); }

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  std::vector<Complex>& coeffs() { return coeffs_; }

  Complex at(const std::vector<long long>& k) const {
    return window_.contains(k) ? coeffs_[window_.linear(k)] : Complex(0.0, 0.0);
  }
  void set(const std::vector<long long>& k, Complex v) {
    coeffs_[window_.linear(k)] = v;
  }
  Complex& ref(const std::vector<long long>& k) { return coeffs_[window_.linear(k)]; }

  /// Copy onto a (larger) window, zero-filling; the new window must contain
  /// the old one axis by axis.
  CoeffTensor embedded(const Window& window) const;
  CoeffTensor restricted(const Window& window) const;

  /// Reorder factors by perm (1-based axis numbers, new axis i takes old
  /// axis perm[i-1]).
  CoeffTensor transposed(const std::vector<int>& perm) const;

 private:
  TensorParams params_;
  Window window_;
  std::vector<Complex> coeffs_;
};

/// Iterate all multi-indices of a window in row-major order.
template <class F>
void for_each_index(const Window& w, F&& f) {
  if (w.d() == 0 || w.size() == 0) return;
  std::vector<long long> k(w.axes.size());
  for (int a = 0; a < w.d(); ++a) k[a] = w.axes[a].lo;
  for (;;) {
    f(k);
    int a = w.d() - 1;
    for (; a >= 0; --a) {
      if (++k[a] <= w.axes[a].hi) break;
      k[a] = w.axes[a].lo;
    }
    if (a < 0) return;
  }
}

CoeffTensor operator+(const CoeffTensor& a, const CoeffTensor& b);
CoeffTensor operator-(const CoeffTensor& a, const CoeffTensor& b);
CoeffTensor operator*(Complex s, const CoeffTensor& a);

/// Weight (1 + sum mu_i + 2 sum (k_i + eps_i/2)^2)^tau of the Sobolev scale.
double sobolev_weight(const TensorParams& params, const std::vector<long long>& k,
                      double tau);

/// Weighted l2 norm sqrt(sum weight^tau |f(k)|^2 prod ||u_{k_i}||^2).
double sobolev_norm(const CoeffTensor& f, double tau);

inline double norm0(const CoeffTensor& f) { return sobolev_norm(f, 0.0); }

/// Unweighted-in-tau pairing <f,g>_0 = sum f(k) conj(g(k)) prod ||u_{k_i}||^2.
Complex inner0(const CoeffTensor& f, const CoeffTensor& g);

/// Apply the diagonal generator of one factor. The window expands by one in
/// each legal direction; at a discrete-series bottom index the vanishing
/// lowering coefficient applies automatically.
CoeffTensor apply_X(const CoeffTensor& f, int axis);

/// Fix the given axes at basis indices, scaling by the fixed factors' basis
/// norms ||u_k||. Axes are processed in ascending order, so nested single-
/// axis fixes agree bitwise with one combined call.
CoeffTensor project(const CoeffTensor& f, const std::map<int, long long>& fixed);

}  // namespace cohom
