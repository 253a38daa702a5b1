#pragma once

#include <vector>

#include "cohom/tensor.hpp"

namespace cohom {

/// One product distribution D_n, selected by a 0-1 vector over the factors
/// (sigma_i = 0 forced on discrete factors).
struct InvariantDistribution {
  TensorParams params;
  std::vector<int> sigma;

  std::string sigma_string() const;
};

/// Value D_sigma(u_k) of the one-factor distribution, as a log-domain
/// product of beta ratios walked from the anchor u_{i_nu+sigma} (where the
/// value is 1) by the recurrence D(u_{c+1}) = beta(c) D(u_{c-1}).
/// Zero off the sigma parity class.
LogComplex d_value(const IrrepParams& p, int sigma, long long k);

/// Same walk without the invariance guard; used for the solver's formal
/// odd-chain weights in the discrete series.
LogComplex d_value_formal(const IrrepParams& p, int sigma, long long k);

/// Table of d_value over [lo, hi] in one sweep.
std::vector<LogComplex> d_table(const IrrepParams& p, int sigma, long long lo,
                                long long hi);

/// D(f) = sum over the window of f(k) prod_i D_{sigma_i}(u_{k_i}).
Complex eval(const InvariantDistribution& D, const CoeffTensor& f);

/// All product distributions of the representation, enumerated with sigma_1
/// most significant: (0,...,0), (0,...,1), ..., discrete entries pinned to 0.
std::vector<InvariantDistribution> basis_of_distributions(const TensorParams& params);

/// eval for every basis distribution, in enumeration order.
std::vector<Complex> kernel_defect(const CoeffTensor& f);

double max_abs(const std::vector<Complex>& v);

/// CSV rows "sigma,re,im,magnitude" for a defect vector.
std::string kernel_defect_csv(const TensorParams& params,
                              const std::vector<Complex>& defects);

}  // namespace cohom
