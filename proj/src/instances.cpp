#include "cohom/instances.hpp"

#include <cmath>

#include "cohom/errors.hpp"

namespace cohom {

CoeffTensor random_decaying(const TensorParams& params, const Window& w, Rng& rng,
                            double width) {
  CoeffTensor f(params, w);
  std::vector<double> centers(static_cast<std::size_t>(w.d()));
  for (int a = 0; a < w.d(); ++a)
    centers[static_cast<std::size_t>(a)] =
        0.5 * static_cast<double>(w.axes[static_cast<std::size_t>(a)].lo +
                                  w.axes[static_cast<std::size_t>(a)].hi);
  for_each_index(w, [&](const std::vector<long long>& k) {
    double damp = 0.0;
    for (int a = 0; a < w.d(); ++a) {
      double x = static_cast<double>(k[static_cast<std::size_t>(a)]) -
                 centers[static_cast<std::size_t>(a)];
      damp += x * x;
    }
    damp = std::exp(-damp / (2.0 * width * width));
    f.ref(k) = damp * rng.gaussian_complex();
  });
  return f;
}

CoeffTensor random_in_kernel(const TensorParams& params, long long radius, Rng& rng,
                             double width, std::vector<int> axes) {
  if (axes.empty())
    for (int a = 1; a <= params.d(); ++a) axes.push_back(a);
  Window inner = symmetric_window(params, radius - 1);
  Window outer = symmetric_window(params, radius);
  CoeffTensor f(params, outer);
  for (int axis : axes) {
    CoeffTensor h = random_decaying(params, inner, rng, width);
    f = f + apply_X(h, axis).embedded(outer);
  }
  return f;
}

IrrepParams draw_params(Series s, Rng& rng) {
  switch (s) {
    case Series::FirstPrincipal:
      return make_first_principal(0.25 + 0.25 * rng.uniform(0.0, 100.0));
    case Series::SecondPrincipal:
      return make_second_principal(0.3 + 0.25 * rng.uniform(0.0, 100.0));
    case Series::Complementary: {
      double nu = rng.uniform(0.05, 0.9);
      return make_complementary((1.0 - nu * nu) / 4.0);
    }
    case Series::FirstDiscrete:
      return make_first_discrete(static_cast<int>(rng.uniform_int(1, 6)));
    case Series::SecondDiscrete:
      return make_second_discrete(static_cast<int>(rng.uniform_int(1, 6)));
  }
  throw Error(ErrorCode::BadInput, "draw_params: bad series");
}

std::vector<IrrepParams> all_series_draws(std::uint64_t seed, int per_series) {
  std::vector<IrrepParams> out;
  int stream = 0;
  for (Series s : {Series::FirstPrincipal, Series::SecondPrincipal,
                   Series::Complementary, Series::FirstDiscrete,
                   Series::SecondDiscrete}) {
    for (int i = 0; i < per_series; ++i) {
      Rng rng(seed, static_cast<std::uint64_t>(1000 + stream));
      out.push_back(draw_params(s, rng));
      ++stream;
    }
  }
  return out;
}

}  // namespace cohom
