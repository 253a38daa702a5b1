#include <doctest.h>

#include "helpers.hpp"

using namespace cohom;
using namespace cohom::test;

TEST_CASE("geometric weight has total mass 1") {
  // windowed partial sums of the analytic normalizers
  TensorParams bold{{make_first_principal(0.3), make_first_discrete(1)}};
  SplitWeight w{0.5};
  double mass = 0.0;
  for (long long l1 = -40; l1 <= 40; ++l1)
    for (long long l2 = 0; l2 <= 40; ++l2) mass += w.value(bold, {l1, l2});
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("split is an exact decomposition") {
  TensorParams tp{{make_first_principal(0.5), make_complementary(0.21)}};
  Window w = symmetric_window(tp, 10);
  Rng rng(8);
  CoeffTensor f = random_decaying(tp, w, rng, 4.0);
  SplitResult sr = split(f);
  REQUIRE(sr.f1.size() == f.size());
  // fmu is the stored complement f - f1 (bitwise), so re-adding recovers f
  // to one rounding per entry
  for (std::size_t i = 0; i < f.size(); ++i) {
    Complex complement = f.coeffs()[i] - sr.f1.coeffs()[i];
    CHECK(std::memcmp(&complement, &sr.fmu.coeffs()[i], sizeof(Complex)) == 0);
  }
  CHECK(norm0((sr.f1 + sr.fmu) - f) <= 1e-15 * norm0(f));
}

TEST_CASE("bold-derivative data has zero first part") {
  // inner sums vanish when every bold fiber is a bold X-derivative
  TensorParams tp{{make_first_principal(0.5), make_second_principal(0.8),
                   make_complementary(0.1875)}};
  Rng rng(19);
  CoeffTensor f = random_in_kernel(tp, 8, rng, 3.0, {2, 3});
  SplitResult sr = split(f);
  CHECK(norm0(sr.f1) <= 1e-10 * norm0(f));
  CHECK(norm0(sr.fmu - f) <= 1e-10 * norm0(f));
}

TEST_CASE("delta input concentrates on the invariant parity class") {
  TensorParams tp{{make_first_principal(0.25), make_complementary(0.1875)}};
  Window w = symmetric_window(tp, 6);
  CoeffTensor f = delta(tp, w, {3, 0});  // bold index at the anchor
  SplitWeight sw{0.5};
  SplitResult sr = split(f, sw);
  // f1(3, 2l) = m(l)/D_0(v_{2l}) with m the window-renormalized weight;
  // zero on the odd class and off-row
  TensorParams boldp{{tp.factor(2)}};
  double mass = 0.0;
  for (long long l = -3; l <= 3; ++l) mass += sw.value(boldp, {l});
  auto d0 = d_table(tp.factor(2), 0, -6, 6);
  for (long long l = -3; l <= 3; ++l) {
    Complex expect = sw.value(boldp, {l}) / mass /
                     d0[static_cast<std::size_t>(2 * l + 6)].value();
    CHECK(rel_diff(sr.f1.at({3, 2 * l}), expect) <= 1e-13);
  }
  for (long long k = -6; k <= 6; ++k) {
    if (k == 3) continue;
    for (long long j = -6; j <= 6; ++j) CHECK(std::abs(sr.f1.at({k, j})) == 0.0);
  }
  for (long long j = -3; j <= 2; ++j) CHECK(std::abs(sr.f1.at({3, 2 * j + 1})) == 0.0);
}

TEST_CASE("split parts land in the advertised kernels") {
  // two and three factors, in-kernel data
  std::vector<TensorParams> cases = {
      TensorParams{{make_first_principal(0.5), make_complementary(0.24)}},
      TensorParams{{make_second_principal(0.8), make_first_discrete(1),
                    make_first_principal(1.25)}}};
  int stream = 0;
  for (const auto& tp : cases) {
    Rng rng(33, static_cast<std::uint64_t>(stream++));
    long long radius = tp.d() == 2 ? 16 : 6;
    CoeffTensor f = random_in_kernel(tp, radius, rng, radius / 3.0);
    SplitResult sr = split(f);
    SplitKernelReport rep = verify_split_kernels(sr.f1, sr.fmu, 1e-8);
    CHECK(rep.pass);
    CHECK(std::max(rep.worst_f1, rep.worst_fmu) <= 1e-8 * norm0(f));
  }
}

TEST_CASE("defects scale linearly with an injected off-kernel perturbation") {
  TensorParams tp{{make_first_principal(0.5), make_complementary(0.24)}};
  Rng rng(44);
  CoeffTensor f = random_in_kernel(tp, 12, rng, 4.0);
  Window w = f.window();
  double base = norm0(f);
  std::vector<double> worst;
  for (double eta : {1e-3, 1e-2, 1e-1}) {
    CoeffTensor g = f + Complex(eta * base, 0.0) * delta(tp, w, {0, 0});
    SplitResult sr = split(g);
    SplitKernelReport rep = verify_split_kernels(sr.f1, sr.fmu, 1e-8);
    worst.push_back(std::max(rep.worst_f1, rep.worst_fmu));
  }
  CHECK(worst[1] / worst[0] == doctest::Approx(10.0).epsilon(0.05));
  CHECK(worst[2] / worst[1] == doctest::Approx(10.0).epsilon(0.05));
}

TEST_CASE("first part keeps the regularity of the input") {
  // |f1|_s <= C |f|_{2s+d}; the fitted C is stable when the window doubles
  TensorParams tp{{make_first_principal(0.5), make_complementary(0.21)}};
  double s = 1.0;
  double c_small = 0.0, c_big = 0.0;
  Rng rng(66);
  for (int rep = 0; rep < 10; ++rep) {
    CoeffTensor f = random_in_kernel(tp, 12, rng, 3.0);
    CoeffTensor f2 = f.embedded(symmetric_window(tp, 24));
    double denom = sobolev_norm(f, 2.0 * s + 1.0);
    c_small = std::max(c_small, sobolev_norm(split(f).f1, s) / denom);
    c_big = std::max(c_big, sobolev_norm(split(f2).f1, s) /
                                sobolev_norm(f2, 2.0 * s + 1.0));
  }
  CHECK(std::isfinite(c_small));
  CHECK(std::fabs(c_big - c_small) <= 0.10 * c_small);
}

TEST_CASE("split report csv shape") {
  TensorParams tp{{make_first_principal(0.5), make_complementary(0.24)}};
  Rng rng(9);
  CoeffTensor f = random_in_kernel(tp, 6, rng, 2.0);
  SplitResult sr = split(f);
  SplitKernelReport rep = verify_split_kernels(sr.f1, sr.fmu, 1e-8);
  std::string csv = split_report_csv(sr, rep);
  CHECK(csv.rfind("kind,slice,sigma,value\n", 0) == 0);
  CHECK(csv.find("f1_D0") != std::string::npos);
  CHECK(csv.find("fmu") != std::string::npos);
  CHECK(csv.find("truncation") != std::string::npos);
}
