#include "cohom/irrep.hpp"

#include <cmath>
#include <sstream>

#include "cohom/errors.hpp"

namespace cohom {

namespace {

constexpr double kClassifyTol = 1e-9;

bool near(double a, double b) {
  return std::abs(a - b) <= kClassifyTol * std::max({1.0, std::abs(a), std::abs(b)});
}

IrrepParams finish(Series s, double mu, int eps, Complex nu, int n) {
  IrrepParams p;
  p.series = s;
  p.mu = mu;
  p.epsilon = eps;
  p.nu = nu;
  p.n = n;
  p.i_nu = static_cast<int>(std::floor((1.0 + nu.real()) / 2.0));
  return p;
}

[[noreturn]] void inconsistent(double mu, int eps, const std::string& why) {
  std::ostringstream os;
  os << "no series matches mu=" << mu << ", epsilon=" << eps << " (" << why << ")";
  throw Error(ErrorCode::InconsistentParameters, os.str());
}

}  // namespace

const char* series_name(Series s) {
  switch (s) {
    case Series::FirstPrincipal: return "first_principal";
    case Series::SecondPrincipal: return "second_principal";
    case Series::Complementary: return "complementary";
    case Series::FirstDiscrete: return "first_discrete";
    case Series::SecondDiscrete: return "second_discrete";
  }
  return "?";
}

Series series_from_name(const std::string& name) {
  if (name == "first_principal") return Series::FirstPrincipal;
  if (name == "second_principal") return Series::SecondPrincipal;
  if (name == "complementary") return Series::Complementary;
  if (name == "first_discrete") return Series::FirstDiscrete;
  if (name == "second_discrete") return Series::SecondDiscrete;
  throw Error(ErrorCode::BadInput, "unknown series name '" + name + "'");
}

IrrepParams make_first_principal(double mu) {
  if (mu < 0.25) throw Error(ErrorCode::InconsistentParameters, "first principal needs mu >= 1/4");
  return finish(Series::FirstPrincipal, mu, 0, Complex(0.0, std::sqrt(4.0 * mu - 1.0)), 0);
}

IrrepParams make_second_principal(double mu) {
  if (mu <= 0.25) throw Error(ErrorCode::InconsistentParameters, "second principal needs mu > 1/4");
  return finish(Series::SecondPrincipal, mu, 1, Complex(0.0, std::sqrt(4.0 * mu - 1.0)), 0);
}

IrrepParams make_complementary(double mu) {
  if (!(mu > 0.0 && mu < 0.25))
    throw Error(ErrorCode::InconsistentParameters, "complementary needs 0 < mu < 1/4");
  return finish(Series::Complementary, mu, 0, Complex(std::sqrt(1.0 - 4.0 * mu), 0.0), 0);
}

IrrepParams make_first_discrete(int n) {
  if (n < 1) throw Error(ErrorCode::InconsistentParameters, "discrete index n must be >= 1");
  double mu = static_cast<double>(-n) * n + n;
  return finish(Series::FirstDiscrete, mu, 0, Complex(2.0 * n - 1.0, 0.0), n);
}

IrrepParams make_second_discrete(int n) {
  if (n < 1) throw Error(ErrorCode::InconsistentParameters, "discrete index n must be >= 1");
  double mu = 0.25 - static_cast<double>(n) * n;
  return finish(Series::SecondDiscrete, mu, 1, Complex(2.0 * n, 0.0), n);
}

IrrepParams classify(double mu, int epsilon, std::optional<Series> series_hint) {
  if (epsilon != 0 && epsilon != 1)
    throw Error(ErrorCode::InconsistentParameters, "epsilon must be 0 or 1");

  IrrepParams p;
  if (epsilon == 0) {
    if (mu >= 0.25 - kClassifyTol) {
      p = make_first_principal(std::max(mu, 0.25));
    } else if (mu > kClassifyTol) {
      p = make_complementary(mu);
    } else if (near(mu, 0.0)) {
      // mu = 0 is shared with the (unsupported) trivial representation.
      if (!series_hint)
        throw Error(ErrorCode::AmbiguousSeries,
                    "mu = 0 requires a series hint (first_discrete)");
      if (*series_hint != Series::FirstDiscrete)
        inconsistent(mu, epsilon, "mu = 0 only matches the first discrete series");
      p = make_first_discrete(1);
    } else {
      // mu = -n^2 + n for some integer n >= 2.
      double nu = std::sqrt(1.0 - 4.0 * mu);
      int n = static_cast<int>(std::lround((nu + 1.0) / 2.0));
      if (n < 1 || !near(mu, static_cast<double>(-n) * n + n))
        inconsistent(mu, epsilon, "not of the form -n^2+n");
      p = make_first_discrete(n);
    }
  } else {
    if (mu > 0.25 + kClassifyTol) {
      p = make_second_principal(mu);
    } else {
      double nu = std::sqrt(std::max(0.0, 1.0 - 4.0 * mu));
      int n = static_cast<int>(std::lround(nu / 2.0));
      if (n < 1 || !near(mu, 0.25 - static_cast<double>(n) * n))
        inconsistent(mu, epsilon, "not of the form 1/4-n^2 and not > 1/4");
      p = make_second_discrete(n);
    }
  }

  if (series_hint && *series_hint != p.series)
    inconsistent(mu, epsilon,
                 std::string("hint ") + series_name(*series_hint) +
                     " conflicts with matched series " + series_name(p.series));
  return p;
}

Complex b_plus(const IrrepParams& p, long long k) {
  return (Complex(2.0 * k + p.epsilon, 0.0) + (1.0 + p.nu)) / 4.0;
}

Complex b_minus(const IrrepParams& p, long long k) {
  return (Complex(2.0 * k + p.epsilon, 0.0) - (1.0 + p.nu)) / 4.0;
}

Complex beta(const IrrepParams& p, long long k) {
  Complex bp = b_plus(p, k);
  if (std::abs(bp) == 0.0)
    throw Error(ErrorCode::DivisionByZero, "beta: b_plus(k) vanishes");
  return b_minus(p, k) / bp;
}

LogComplex pi_product(const IrrepParams& p, long long k) {
  if (k < p.i_nu)
    throw Error(ErrorCode::IndexBelowStart, "pi_product needs k >= i_nu");
  if (p.series == Series::FirstPrincipal || p.series == Series::SecondPrincipal)
    return LogComplex::one();  // numerator and denominator coincide for nu in iR
  LogComplex prod = LogComplex::one();
  Complex nu_bar = std::conj(p.nu);
  for (long long i = p.i_nu + 1; i <= k; ++i) {
    Complex num = Complex(2.0 * i + p.epsilon - 1.0, 0.0) - p.nu;
    Complex den = Complex(2.0 * i + p.epsilon - 1.0, 0.0) + nu_bar;
    prod *= LogComplex::from(num) / LogComplex::from(den);
  }
  return prod;
}

double basis_norm_sq(const IrrepParams& p, long long k) {
  if (!p.index_valid(k))
    throw Error(ErrorCode::IndexOutOfRange, "basis_norm_sq: k below discrete start");
  long long a = k < 0 ? -k : k;
  return pi_product(p, a).abs();
}

std::vector<double> basis_log_norm_sq_table(const IrrepParams& p, long long lo,
                                            long long hi) {
  if (hi < lo) return {};
  if (!p.index_valid(lo))
    throw Error(ErrorCode::IndexOutOfRange, "basis_log_norm_sq_table: window below discrete start");
  std::vector<double> out(static_cast<size_t>(hi - lo + 1), 0.0);
  if (p.series == Series::FirstPrincipal || p.series == Series::SecondPrincipal)
    return out;
  long long kmax = std::max(std::llabs(lo), std::llabs(hi));
  // running log |Pi_{nu,eps,a}| for a = 0..kmax
  std::vector<double> logpi(static_cast<size_t>(kmax + 1), 0.0);
  double acc = 0.0;
  for (long long a = 1; a <= kmax; ++a) {
    if (a > p.i_nu) {
      double num = std::abs(2.0 * a + p.epsilon - 1.0 - p.nu.real());
      double den = std::abs(2.0 * a + p.epsilon - 1.0 + p.nu.real());
      acc += std::log(num) - std::log(den);
    }
    logpi[static_cast<size_t>(a)] = acc;
  }
  for (long long k = lo; k <= hi; ++k)
    out[static_cast<size_t>(k - lo)] = logpi[static_cast<size_t>(k < 0 ? -k : k)];
  return out;
}

}  // namespace cohom
