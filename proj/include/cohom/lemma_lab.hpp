#pragma once

#include <string>
#include <vector>

#include "cohom/irrep.hpp"

namespace cohom {

struct GridSpec {
  long long max_k = 4096;
};

struct CsvRow {
  std::string lemma;
  std::string point;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string lemma;
  std::string grid;
  std::vector<std::pair<std::string, double>> constants;  // fitted
  double worst_ratio = 0.0;
  std::string worst_at;
  bool pass = false;
  double runtime_ms = 0.0;
  long long excluded_points = 0;  // grid points where a printed bound is undefined
  std::vector<CsvRow> rows;
};

/// Suites: two-sided bound grids with fitted constants required finite and
/// stable (within 10%) when the index range doubles.
///   lemma3.1  basis-norm products: exactly 1 (principal), power-law
///             envelopes (complementary), ratio envelopes (discrete)
///   lemma2.6  distribution-to-norm ratio against the Sobolev weight
///   lemmaA.3  interleaving of the homogeneous magnitudes across parities
///   lemmaA.4  principal-series homogeneous asymptotics
///   lemmaA.5  complementary-series homogeneous envelopes (explicit constants)
///   lemmaA.6  discrete-series homogeneous envelopes (explicit constants)
///   lemmaA.8  linear forms against the Sobolev weight
///   order3.4  convergence of the distribution-order series for tau > 0
///   logA.4    x/(1+x) <= log(1+x) <= x on a dense grid
std::vector<std::string> lemma_suites();

VerificationReport verify(const std::string& lemma_id, const GridSpec& grid = {},
                          int threads = 1);

std::string report_csv(const std::vector<VerificationReport>& reports);

}  // namespace cohom
