#include <doctest.h>

#include <random>

#include "pwlab/matrix3.hpp"
#include "pwlab/scaled_complex.hpp"

using namespace pwlab;

TEST_CASE("normalization invariant") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    ScaledComplex s(Complex(d(rng), d(rng)));
    if (s.is_zero()) continue;
    double am = std::abs(s.mantissa());
    CHECK(am >= 1.0);
    CHECK(am < std::exp(1.0));
  }
  ScaledComplex z = ScaledComplex::zero();
  CHECK(z.is_zero());
  CHECK(z.exponent() == 0.0);
}

TEST_CASE("mul/add agree with plain complex arithmetic") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(-20.0, 20.0);
  double worst_mul = 0.0, worst_add = 0.0, worst_add_backward = 0.0;
  for (int i = 0; i < 1000000; ++i) {
    Complex a(d(rng), d(rng)), b(d(rng), d(rng));
    ScaledComplex sa(a), sb(b);
    Complex m = (sa * sb).to_complex();
    Complex s = (sa + sb).to_complex();
    if (a * b != Complex(0, 0)) worst_mul = std::max(worst_mul, std::abs(m - a * b) / std::abs(a * b));
    double opscale = std::max(std::abs(a), std::abs(b));
    worst_add_backward = std::max(worst_add_backward, std::abs(s - (a + b)) / opscale);
    // forward relative error is only meaningful away from catastrophic
    // cancellation of the plain sum itself
    if (std::abs(a + b) > 0.1 * opscale)
      worst_add = std::max(worst_add, std::abs(s - (a + b)) / std::abs(a + b));
  }
  CHECK(worst_mul < 1e-13);
  CHECK(worst_add < 1e-13);
  CHECK(worst_add_backward < 1e-13);
}

TEST_CASE("huge-exponent addition keeps the leading scale") {
  ScaledComplex a = ScaledComplex::exp_form(100.0, 0.0);
  ScaledComplex b = ScaledComplex::exp_form(90.0, 0.0);
  ScaledComplex s = a + b;
  CHECK(s.log_abs() == doctest::Approx(100.0 + std::log1p(std::exp(-10.0))).epsilon(1e-13));
  // mantissa * e^(exponent-100) = 1 + e^-10
  double val = std::exp(s.log_abs() - 100.0);
  CHECK(val == doctest::Approx(1.0 + std::exp(-10.0)).epsilon(1e-13));
}

TEST_CASE("exp form handles exponents far beyond double range") {
  ScaledComplex big = ScaledComplex::exp_form(5000.0, 1.0);
  ScaledComplex small = ScaledComplex::exp_form(-5000.0, -1.0);
  ScaledComplex prod = big * small;
  CHECK(prod.log_abs() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(prod.arg() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK((big * big).log_abs() == doctest::Approx(10000.0));
}

TEST_CASE("matrix3s inverse and determinant") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  Matrix3s m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = ScaledComplex(Complex(d(rng), d(rng)));
  Matrix3s p = m * inverse(m);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Complex expect = (i == j) ? Complex(1, 0) : Complex(0, 0);
      CHECK(std::abs(p(i, j).to_complex() - expect) < 1e-12);
    }
}
