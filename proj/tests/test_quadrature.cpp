#include <doctest.h>

#include <numbers>

#include "pwlab/quadrature.hpp"
#include "pwlab/spectral.hpp"

using namespace pwlab;
namespace {
constexpr double kPi = std::numbers::pi;
// Gamma(1/3)^2 / Gamma(2/3), frozen from an independent high-precision
// evaluation before the build
constexpr double kBeta13 = 5.299916250856349871941068498945316107715;
}  // namespace

TEST_CASE("residue theorem: circle integral of 1/z") {
  PathSpec c = PathSpec::circle(Complex(0, 0), 1.0);
  Complex v = integrate_path(c, [](Complex z) { return 1.0 / z; }, 1e-12);
  CHECK(std::abs(v - Complex(0.0, 2.0 * kPi)) < 1e-12);
}

TEST_CASE("gamma_0 at r = 1: z^(-2/3) integrates to 3(eps-1)") {
  PathSpec c = PathSpec::circle(Complex(0, 0), 1.0);
  BranchState st = BranchState::at(Complex(0, 0), c.start());
  QuadratureOptions opt;
  Complex v = integrate_path(
      c, [](Complex, const BranchState& s) { return s.lifted_power(-2.0 / 3.0); }, opt, &st);
  Complex expect = 3.0 * (cube_root_unity() - 1.0);
  CHECK(std::abs(v - expect) / std::abs(expect) < 1e-12);
  CHECK(expect.real() == doctest::Approx(-4.5));
  CHECK(expect.imag() == doctest::Approx(2.5980762).epsilon(1e-7));
}

TEST_CASE("segment of constant integrand gives its length") {
  PathSpec s = PathSpec::segment(Complex(0.25, 0), Complex(0.5, 0));
  Complex v = integrate_path(s, [](Complex) { return Complex(1, 0); }, 1e-12);
  CHECK(std::abs(v - Complex(0.25, 0)) < 1e-13);
}

TEST_CASE("path and its reverse sum to zero") {
  PathSpec s = PathSpec::concat(
      {PathSpec::segment(Complex(0.3, 0.1), Complex(0.7, 0.4)),
       PathSpec::segment(Complex(0.7, 0.4), Complex(1.1, 0.0))});
  auto f = [](Complex z) { return std::exp(z) * z * z; };
  Complex a = integrate_path(s, f, 1e-12);
  Complex b = integrate_path(s.reversed(), f, 1e-12);
  CHECK(std::abs(a + b) < 2e-12);
}

TEST_CASE("concat rejects incompatible endpoints") {
  CHECK_THROWS_AS(PathSpec::concat({PathSpec::segment(Complex(0, 0), Complex(1, 0)),
                                    PathSpec::segment(Complex(2, 0), Complex(3, 0))}),
                  ArgumentError);
}

TEST_CASE("endpoint-singular integral: t^(-2/3) over [0, 1/2]") {
  double v = integrate_endpoint_singular(0.0, 0.5, -2.0 / 3.0, 0.0);
  CHECK(v == doctest::Approx(3.0 * std::pow(2.0, -1.0 / 3.0)).epsilon(1e-12));
  CHECK(v == doctest::Approx(2.3811016).epsilon(1e-7));
}

TEST_CASE("endpoint-singular integral: full beta value and half symmetry") {
  double full = integrate_endpoint_singular(0.0, 1.0);
  CHECK(full == doctest::Approx(kBeta13).epsilon(1e-12));
  CHECK(full == doctest::Approx(5.2999163).epsilon(1e-7));
  double half = integrate_endpoint_singular(0.0, 0.5);
  CHECK(half == doctest::Approx(0.5 * kBeta13).epsilon(1e-12));
  CHECK(half == doctest::Approx(2.6499581).epsilon(1e-7));
}

TEST_CASE("endpoint-singular integral edge cases") {
  CHECK(integrate_endpoint_singular(0.3, 0.3) == 0.0);
  CHECK_THROWS_AS(integrate_endpoint_singular(0.5, 0.2), ArgumentError);
  CHECK_THROWS_AS(integrate_endpoint_singular(-0.1, 0.5), ArgumentError);
}

TEST_CASE("cube-root continuation around gamma_0") {
  PathSpec loop = PathSpec::circle(Complex(0, 0), 0.1);
  BranchState st = BranchState::at(Complex(0, 0), loop.start());
  BranchState after = continue_cube_root(st, loop);
  Complex mult = cube_root_multiplier(st, after);
  CHECK(std::abs(mult - cube_root_unity()) < 1e-9);

  // two positive loops compose to eps^2
  BranchState twice = continue_cube_root(after, loop);
  CHECK(std::abs(cube_root_multiplier(st, twice) - cube_root_unity_pow(2)) < 1e-9);
}

TEST_CASE("contractible loop leaves the root unchanged") {
  PathSpec loop = PathSpec::circle(Complex(5.0, 0.0), 0.5);
  BranchState st = BranchState::at(Complex(0, 0), loop.start());
  BranchState after = continue_cube_root(st, loop);
  CHECK(std::abs(cube_root_multiplier(st, after) - Complex(1, 0)) < 1e-9);
}

TEST_CASE("continuation through the branch point fails") {
  PathSpec bad = PathSpec::segment(Complex(-1, 0), Complex(1, 0));
  BranchState st = BranchState::at(Complex(0, 0), bad.start());
  CHECK_THROWS_AS(continue_cube_root(st, bad), SingularityError);
}

TEST_CASE("branch tracking survives concatenated contours") {
  // the unit circle assembled from two half-circle arcs plus a closing detour
  // out and back along the real axis; same z^(-2/3) loop value
  double r = 0.7;
  PathSpec loop = PathSpec::concat(
      {PathSpec::segment(Complex(2.0, 0.0), Complex(r, 0.0)),
       PathSpec{{PathSpec::Arc{Complex(0, 0), r, 0.0, kPi}}},
       PathSpec{{PathSpec::Arc{Complex(0, 0), r, kPi, 2.0 * kPi}}},
       PathSpec::segment(Complex(r, 0.0), Complex(2.0, 0.0))});
  BranchState st = BranchState::at(Complex(0, 0), loop.start());
  QuadratureOptions opt;
  Complex v = integrate_path(
      loop, [](Complex, const BranchState& s) { return s.lifted_power(-2.0 / 3.0); }, opt,
      &st);
  // the two segment contributions do not cancel (the return leg sits on the
  // continued branch), so compare against the analytic total
  Complex eps = cube_root_unity();
  Complex circle_part = 3.0 * std::cbrt(r) * (eps - 1.0);
  double seg = 3.0 * (std::cbrt(2.0) - std::cbrt(r));
  Complex expect = -seg + circle_part + eps * seg;
  CHECK(std::abs(v - expect) / std::abs(expect) < 1e-11);
  // and the state records one full positive loop
  CHECK(st.lifted_arg == doctest::Approx(2.0 * kPi).epsilon(1e-12));
}

TEST_CASE("quadrature failure carries its best estimate") {
  // interior near-singularity too sharp for the depth budget at this tol
  PathSpec s = PathSpec::segment(Complex(0, 0), Complex(1, 0));
  QuadratureOptions opt;
  opt.abs_tol = opt.rel_tol = 1e-14;
  opt.max_depth = 6;
  bool threw = false;
  try {
    integrate_path(
        s, [](Complex z) { return std::pow(std::abs(z - Complex(0.5371, 0.0)), -0.97); },
        opt);
  } catch (const QuadratureError& e) {
    threw = true;
    CHECK(e.error_estimate > 0.0);
    CHECK(std::abs(e.best_estimate) > 0.0);
  }
  CHECK(threw);
}
