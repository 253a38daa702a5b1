#pragma once

#include <map>
#include <string>
#include <vector>

#include "cohom/solve_top.hpp"

namespace cohom {

/// Degree-n form over the generators of the diagonal action: an
/// antisymmetric assignment of a coefficient tensor to each strictly
/// increasing n-multi-index in {1..d}. Absent components are zero; present
/// components share the window. Degree 0 is the single component keyed by
/// the empty multi-index.
class DifferentialForm {
 public:
  DifferentialForm(TensorParams params, int degree, Window window);

  const TensorParams& params() const { return params_; }
  int degree() const { return degree_; }
  int d() const { return params_.d(); }
  const Window& window() const { return window_; }

  const std::map<std::vector<int>, CoeffTensor>& components() const { return comps_; }
  bool has_component(const std::vector<int>& axes) const;
  /// Zero tensor on the shared window when absent.
  CoeffTensor component(const std::vector<int>& axes) const;
  void set_component(const std::vector<int>& axes, CoeffTensor value);

 private:
  void validate_axes(const std::vector<int>& axes) const;

  TensorParams params_;
  int degree_ = 0;
  Window window_;
  std::map<std::vector<int>, CoeffTensor> comps_;
};

/// All strictly increasing n-subsets of {1..d}, lexicographic.
std::vector<std::vector<int>> increasing_multi_indices(int d, int n);

double form_norm0(const DifferentialForm& w);
DifferentialForm form_add(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm form_scale(Complex s, const DifferentialForm& a);

/// d omega(X_I) = sum_j (-1)^{j+1} X_{i_j} omega(X_{I_j}); degree rises by
/// one and every axis window widens by one step.
DifferentialForm exterior_derivative(const DifferentialForm& w);

/// The form with every component containing axis m removed.
DifferentialForm drop_axis_components(const DifferentialForm& w, int m);

/// Restrict a form with no m-components to one basis index of factor m:
/// components are projected fiberwise and the generators renumbered.
DifferentialForm restrict_form(const DifferentialForm& w, int m, long long k);

struct ClosedCheck {
  bool closed = false;
  double residual = 0.0;  // norm0 of the exterior derivative
};
ClosedCheck check_closed(const DifferentialForm& w, double tol);

struct PrimitiveOptions {
  double tol = 1e-8;
  Backend backend = Backend::Formula;
  double split_ratio = 0.5;
  int threads = 1;
};

struct PrimitiveResult {
  DifferentialForm eta;
  /// Residual of each one-sided primitive d eta_m - omega (norm0, interior),
  /// before averaging; the averaged residual is last.
  std::vector<std::pair<std::string, double>> per_m;
  double residual = 0.0;
};

/// Primitive of a closed n-form, 1 <= n <= d-1: per generator m, solve the
/// fiberwise problem on the other factors (top-degree at n = d-1, recursing
/// otherwise), undo the fiber scaling, and average the d one-sided
/// primitives with weight 1/(d-n+1).
PrimitiveResult solve_primitive(const DifferentialForm& w,
                                const PrimitiveOptions& opts = {});

/// norm0 of d eta - omega on the interior of omega's window.
double primitive_residual(const DifferentialForm& omega, const DifferentialForm& eta);

}  // namespace cohom
