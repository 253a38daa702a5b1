#pragma once

#include <cmath>
#include <complex>
#include <cstring>
#include <vector>

#include "cohom/distributions.hpp"
#include "cohom/errors.hpp"
#include "cohom/forms.hpp"
#include "cohom/homogeneous.hpp"
#include "cohom/instances.hpp"
#include "cohom/json_io.hpp"
#include "cohom/lemma_lab.hpp"
#include "cohom/solve_top.hpp"

namespace cohom::test {

inline CoeffTensor delta(const TensorParams& params, const Window& w,
                         const std::vector<long long>& at, Complex v = {1.0, 0.0}) {
  CoeffTensor f(params, w);
  f.set(at, v);
  return f;
}

inline double rel_diff(Complex a, Complex b) {
  double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

inline std::vector<IrrepParams> one_of_each_series() {
  return {make_first_principal(0.25), make_first_principal(2.5),
          make_second_principal(1.0), make_complementary(0.1875),
          make_first_discrete(2),     make_second_discrete(1)};
}

}  // namespace cohom::test
