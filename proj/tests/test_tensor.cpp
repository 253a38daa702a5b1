#include <doctest.h>

#include "helpers.hpp"

using namespace cohom;
using namespace cohom::test;

namespace {

TensorParams single(const IrrepParams& p) { return TensorParams{{p}}; }

}  // namespace

TEST_CASE("sobolev weights") {
  TensorParams tp = single(make_first_principal(0.25));
  CHECK(sobolev_weight(tp, {0}, 1.0) == doctest::Approx(1.25));
  CHECK(sobolev_weight(tp, {3}, 0.0) == 1.0);

  TensorParams two{{make_first_principal(0.25), make_first_principal(0.25)}};
  CHECK(sobolev_weight(two, {1, -1}, 2.0) == doctest::Approx(30.25));
}

TEST_CASE("sobolev norms") {
  TensorParams tp = single(make_first_principal(0.25));
  Window w = symmetric_window(tp, 4);
  CHECK(sobolev_norm(delta(tp, w, {0}), 2.0) == doctest::Approx(1.25));
  CHECK(sobolev_norm(CoeffTensor(tp, w), 3.0) == 0.0);

  Rng rng(3);
  CoeffTensor f = random_decaying(tp, w, rng, 2.0);
  double l2 = 0.0;
  for (const auto& c : f.coeffs()) l2 += std::norm(c);
  CHECK(sobolev_norm(f, 0.0) == doctest::Approx(std::sqrt(l2)).epsilon(1e-12));

  // monotone in tau (weights >= 1)
  CHECK(sobolev_norm(f, 0.5) <= sobolev_norm(f, 1.0));
  CHECK(sobolev_norm(f, 1.0) <= sobolev_norm(f, 2.5));
}

TEST_CASE("apply_X on basis vectors") {
  TensorParams tp = single(make_first_principal(0.25));
  Window w = symmetric_window(tp, 2);
  CoeffTensor out = apply_X(delta(tp, w, {0}), 1);
  CHECK(rel_diff(out.at({1}), Complex(0.25, 0.0)) <= 1e-15);
  CHECK(rel_diff(out.at({-1}), Complex(0.25, 0.0)) <= 1e-15);
  CHECK(std::abs(out.at({0})) == 0.0);

  TensorParams td = single(make_first_discrete(2));
  Window wd = symmetric_window(td, 2);
  CoeffTensor outd = apply_X(delta(td, wd, {2}), 1);
  CHECK(outd.window().axes[0].lo == 2);  // no index below the start
  CHECK(rel_diff(outd.at({3}), Complex(2.0, 0.0)) <= 1e-15);
  CHECK(norm0(outd) == doctest::Approx(2.0 * std::sqrt(basis_norm_sq(td.factor(1), 3))));
}

TEST_CASE("apply_X is linear") {
  TensorParams tp{{make_complementary(0.21), make_second_principal(0.6)}};
  Window w = symmetric_window(tp, 5);
  Rng rng(11);
  CoeffTensor f = random_decaying(tp, w, rng, 2.0);
  CoeffTensor g = random_decaying(tp, w, rng, 2.0);
  Complex a(1.5, -0.25), b(-0.75, 2.0);
  CoeffTensor lhs = apply_X(a * f + b * g, 2);
  CoeffTensor rhs = a * apply_X(f, 2) + b * apply_X(g, 2);
  CHECK(norm0(lhs - rhs) <= 1e-12 * (norm0(lhs) + 1.0));
}

TEST_CASE("X is skew-adjoint in the unitary pairing") {
  for (const auto& p : one_of_each_series()) {
    TensorParams tp = single(p);
    Window inner = symmetric_window(tp, 7);
    Window outer = symmetric_window(tp, 8);
    Rng rng(23 + p.epsilon + p.n);
    CoeffTensor f = random_decaying(tp, inner, rng, 3.0).embedded(outer);
    CoeffTensor g = random_decaying(tp, inner, rng, 3.0).embedded(outer);
    Complex lhs = inner0(apply_X(f, 1).restricted(outer), g);
    Complex rhs = -inner0(f, apply_X(g, 1).restricted(outer));
    CHECK(rel_diff(lhs, rhs) <= 1e-10);
  }
}

TEST_CASE("projection fixes axes with the basis-norm scaling") {
  TensorParams tp{{make_first_principal(0.5), make_complementary(0.1875)}};
  Window w = symmetric_window(tp, 3);
  Rng rng(5);
  CoeffTensor f = random_decaying(tp, w, rng, 2.0);

  // principal factors have unit norms: projection is slicing
  CoeffTensor row = project(f, {{1, 2}});
  for (long long k = -3; k <= 3; ++k)
    CHECK(rel_diff(row.at({k}), f.at({2, k})) <= 1e-15);

  // complementary factor scales by sqrt(1/3) at k2 = 1
  CoeffTensor col = project(f, {{2, 1}});
  for (long long k = -3; k <= 3; ++k)
    CHECK(rel_diff(col.at({k}), std::sqrt(1.0 / 3.0) * f.at({k, 1})) <= 1e-14);

  CHECK(norm0(project(CoeffTensor(tp, w), {{1, 0}})) == 0.0);
  CHECK_THROWS_AS(project(f, {{2, 9}}), Error);

  // norm does not grow under projection
  for (double tau : {0.0, 1.0, 2.0})
    CHECK(sobolev_norm(row, tau) <= sobolev_norm(f, tau) * (1.0 + 1e-12));
}

TEST_CASE("nested and combined projections agree bitwise") {
  TensorParams tp{{make_first_principal(0.5), make_complementary(0.21),
                   make_second_discrete(1)}};
  Window w = symmetric_window(tp, 3);
  Rng rng(9);
  CoeffTensor f = random_decaying(tp, w, rng, 2.0);
  CoeffTensor nested = project(project(f, {{2, 1}}), {{2, 3}});  // axis 3 after removal
  CoeffTensor combined = project(f, {{2, 1}, {3, 3}});
  REQUIRE(nested.size() == combined.size());
  for (std::size_t i = 0; i < nested.size(); ++i)
    CHECK(nested.coeffs()[i] == combined.coeffs()[i]);
}

TEST_CASE("fiber norms sum into the mixed Sobolev norm") {
  // sum_k (1 + mu_1 + 2(k+eps/2)^2)^tau |(f|_k)|_sigma^2 <= |f|_{tau+sigma}^2
  TensorParams tp{{make_second_principal(0.75), make_complementary(0.24)}};
  Window w = symmetric_window(tp, 6);
  Rng rng(31);
  for (int rep = 0; rep < 5; ++rep) {
    CoeffTensor f = random_decaying(tp, w, rng, 2.5);
    for (int tau : {1, 2}) {
      for (int sigma : {1, 2}) {
        double lhs = 0.0;
        for (long long k = -6; k <= 6; ++k) {
          double wk = sobolev_weight(TensorParams{{tp.factor(1)}}, {k},
                                     static_cast<double>(tau));
          double fn = sobolev_norm(project(f, {{1, k}}), sigma);
          lhs += wk * fn * fn;
        }
        double rhs = sobolev_norm(f, tau + sigma);
        CHECK(lhs <= rhs * rhs * (1.0 + 1e-10));
      }
    }
  }
}

TEST_CASE("transpose round-trips") {
  TensorParams tp{{make_first_principal(0.5), make_first_discrete(1),
                   make_complementary(0.2)}};
  Window w = symmetric_window(tp, 2);
  Rng rng(41);
  CoeffTensor f = random_decaying(tp, w, rng, 2.0);
  CoeffTensor t = f.transposed({3, 1, 2});
  CHECK(t.params().factor(1).series == Series::Complementary);
  CHECK(rel_diff(t.at({1, -2, 2}), f.at({-2, 2, 1})) == 0.0);
  CoeffTensor back = t.transposed({2, 3, 1});
  for (std::size_t i = 0; i < f.size(); ++i)
    CHECK(back.coeffs()[i] == f.coeffs()[i]);
}
