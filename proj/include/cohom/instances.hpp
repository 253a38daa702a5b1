#pragma once

#include "cohom/rng.hpp"
#include "cohom/tensor.hpp"

namespace cohom {

/// Gaussian-profile random tensor: complex gaussian coefficients damped by
/// exp(-(k - c)^2 / (2 width^2)) per axis (c = the window center), so high-
/// order Sobolev norms converge well inside the window and are stable under
/// window doubling.
CoeffTensor random_decaying(const TensorParams& params, const Window& w, Rng& rng,
                            double width);

/// f = sum_i apply_X(h_i, axis_i) for random decaying h_i on a window one
/// step smaller; lies in the kernel of every invariant distribution up to
/// rounding. Pass the axes to include (default: all).
CoeffTensor random_in_kernel(const TensorParams& params, long long radius, Rng& rng,
                             double width, std::vector<int> axes = {});

/// Deterministic parameter draws per series for test sweeps.
IrrepParams draw_params(Series s, Rng& rng);

std::vector<IrrepParams> all_series_draws(std::uint64_t seed, int per_series);

}  // namespace cohom
