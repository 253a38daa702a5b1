#pragma once

#include <string>
#include <vector>

#include "cohom/solve1d.hpp"
#include "cohom/split.hpp"

namespace cohom {

/// Sobolev index s_d of the degree-d estimate: the closed form
/// 2^{d-1} s + sum_{i=1}^{d-1} 2^{i-1} (2s + d - i), equal to the recursion
/// s_{d+1} = 2 (s_d + s) + d with s_1 = s.
double sobolev_index(double s, int d);

struct TopReportRow {
  std::string slice;
  double residual = 0.0;
};

struct TopOptions {
  double tol = 1e-8;
  Backend backend = Backend::Formula;
  double split_ratio = 0.5;
  /// Permutation of 1..d choosing the recursion order; empty = identity.
  /// Permuted runs agree in residual, not in the (non-unique) g's.
  std::vector<int> axis_order;
  int threads = 1;
  /// Absolute scale for the kernel-defect gates (0 = the input's own norm);
  /// set by callers solving fibers of a larger problem.
  double defect_scale = 0.0;
};

struct TopResult {
  std::vector<CoeffTensor> g;  // one tensor per generator
  std::vector<TopReportRow> rows;
};

/// Solve X_1 g_1 + ... + X_d g_d = f for f in the kernel of every product
/// invariant distribution. Dimension recursion: split f = f1 + fmu, solve
/// the axis-1 equation fiberwise on f1, recurse on the bold block of fmu,
/// and assemble with the inverse fiber scalings.
TopResult solve_top(const CoeffTensor& f, const TopOptions& opts = {});

/// norm0 of sum apply_X(g_i, i) - f on the interior of f's window.
double residual(const CoeffTensor& f, const std::vector<CoeffTensor>& gs);

/// Solve sum_{a in axes} X_a g_a = f where the remaining axes are inert
/// multiplicity directions: independent solves over every passenger fiber.
/// Returns one tensor per entry of axes, on f's window.
std::vector<CoeffTensor> solve_top_axes(const CoeffTensor& f,
                                        const std::vector<int>& axes,
                                        const TopOptions& opts);

std::string top_report_csv(const std::vector<TopReportRow>& rows);

}  // namespace cohom
