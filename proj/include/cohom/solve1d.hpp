#pragma once

#include <string>

#include "cohom/tensor.hpp"

namespace cohom {

enum class Backend { Formula, Lsq };

Backend backend_from_name(const std::string& name);

struct SolveOptions {
  double tol = 1e-8;
  Backend backend = Backend::Formula;
  /// Absolute scale for the kernel-defect gate: defects must satisfy
  /// |D(f)| <= tol * max(norm0(f), defect_scale). Zero means gate against
  /// the input's own norm.
  double defect_scale = 0.0;
};

/// Solve X g = f in one irreducible factor.
///
/// The `formula` backend rewrites the one-sided Green's-function sums as
/// tail sums (legitimate exactly on the kernel of the invariant
/// distributions, which is the precondition), so every term decays inside
/// the window; the discrete series is split into even and odd parts and
/// solved by the corresponding tail formulas. The `lsq` backend solves the
/// banded interior system in least squares (minimum-norm).
CoeffTensor solve_1d(const CoeffTensor& f, const SolveOptions& opts = {});

/// Remove the l2-projection onto the truncated homogeneous directions
/// (span{g0,g1}, only g0 for discrete factors); used to compare solver
/// backends, whose outputs differ by homogeneous components.
CoeffTensor project_out_homogeneous(const CoeffTensor& g);

}  // namespace cohom
