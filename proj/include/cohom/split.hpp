#pragma once

#include <string>
#include <vector>

#include "cohom/distributions.hpp"
#include "cohom/tensor.hpp"

namespace cohom {

/// Exponentially decaying mass-1 weight on the offset lattice of the last
/// d factors: a per-axis geometric profile r^{|l|}, normalized analytically
/// to total mass 1 over Z (factor (1-r)/(1+r)) or Z>=0 (factor 1-r).
struct SplitWeight {
  double ratio = 0.5;

  double value(const TensorParams& bold, const std::vector<long long>& offsets) const;
};

struct SplitReportRow {
  std::string kind;   // f1_D0 / f1_D1 / fmu / truncation
  std::string slice;  // semicolon-joined indices
  std::string sigma;  // for fmu rows
  double value = 0.0;
};

struct SplitResult {
  CoeffTensor f1;
  CoeffTensor fmu;
  /// Window-edge mass of the D-weighted inner sums, one row per parity
  /// class: bounds the truncation error of the split.
  std::vector<SplitReportRow> truncation;
};

/// Split f (d+1 factors, axis 1 distinguished) into f1 + fmu, where each
/// axis-1 fiber of f1 over a bold parity point is proportional to the
/// m-weighted, D-normalized inner sum of f's fibers, f1 vanishes off the
/// invariant parity classes, and fmu = f - f1 exactly.
SplitResult split(const CoeffTensor& f, const SplitWeight& w = {});

struct SplitKernelReport {
  std::vector<SplitReportRow> rows;
  double worst_f1 = 0.0;
  double worst_fmu = 0.0;
  bool pass = false;
};

/// Defect report for the split outputs: axis-1 distribution values of every
/// f1 fiber, and bold kernel defects of every fmu fiber, gated against
/// tol * norm0(f1 + fmu).
SplitKernelReport verify_split_kernels(const CoeffTensor& f1, const CoeffTensor& fmu,
                                       double tol);

std::string split_report_csv(const SplitResult& split_result,
                             const SplitKernelReport& kernels);

}  // namespace cohom
