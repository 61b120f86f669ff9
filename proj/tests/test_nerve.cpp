#include <doctest.h>

#include <random>

#include "pwlab/nerve.hpp"

using namespace pwlab;
namespace {
constexpr double kPi = std::numbers::pi;

TraceCoords from_values(Complex X, Complex Y, Complex Z) {
  TraceCoords tc;
  tc.X = ScaledComplex(X);
  tc.Y = ScaledComplex(Y);
  tc.Z = ScaledComplex(Z);
  return tc;
}
}  // namespace

TEST_CASE("blowup chart selection") {
  BlowupCoords a = blowup_coords(from_values({2, 0}, {1, 0}, {100, 0}));
  CHECK(a.chart == BlowupCoords::Chart::near_p1);
  CHECK(std::abs(a.c1.to_complex() - Complex(0.02, 0)) < 1e-14);
  CHECK(std::abs(a.c2.to_complex() - Complex(0.5, 0)) < 1e-14);

  BlowupCoords b = blowup_coords(from_values({1, 0}, {2, 0}, {100, 0}));
  CHECK(b.chart == BlowupCoords::Chart::near_p2);
  CHECK(std::abs(b.c1.to_complex() - Complex(0.02, 0)) < 1e-14);
  CHECK(std::abs(b.c2.to_complex() - Complex(0.5, 0)) < 1e-14);

  // tie goes to the P1 chart
  BlowupCoords c = blowup_coords(from_values({1, 0}, {0, 1}, {10, 0}));
  CHECK(c.chart == BlowupCoords::Chart::near_p1);

  CHECK_THROWS_AS(blowup_coords(from_values({1, 0}, {1, 0}, {0, 0})), ArgumentError);
}

TEST_CASE("simpson map ramp endpoints") {
  // m >= m_hi: the C1-tube vertex
  NervePoint tube = simpson_map(from_values({1, 0}, {1, 0}, {2, 0}));
  CHECK(tube.p0 == doctest::Approx(1.0));
  CHECK(tube.p1 == doctest::Approx(0.0));
  CHECK(tube.p2 == doctest::Approx(0.0));
  CHECK(tube.valid);

  // m <= m_lo, u = 0: deep P1 side
  NervePoint p1 = simpson_map(from_values({1, 0}, {1e-9, 0}, {1e6, 0}));
  CHECK(p1.p0 == doctest::Approx(0.0));
  CHECK(p1.p1 == doctest::Approx(1.0));
  CHECK(p1.p2 == doctest::Approx(0.0));

  // m <= m_lo, u = 1/2: the P0-like midpoint of the far edge
  NervePoint p0 = simpson_map(from_values({1, 0}, {1, 0}, {1e6, 0}));
  CHECK(p0.p0 == doctest::Approx(0.0));
  CHECK(p0.p1 == doctest::Approx(0.5));
  CHECK(p0.p2 == doctest::Approx(0.5));
}

TEST_CASE("nerve points always sum to one") {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> d(-40.0, 40.0);
  for (int t = 0; t < 1000; ++t) {
    TraceCoords tc;
    tc.X = ScaledComplex::exp_form(d(rng), d(rng));
    tc.Y = ScaledComplex::exp_form(d(rng), d(rng));
    tc.Z = ScaledComplex::exp_form(d(rng), d(rng));
    NervePoint p = simpson_map(tc);
    CHECK(p.p0 + p.p1 + p.p2 == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("winding of canonical loops") {
  auto boundary_point = [](double s) {
    s = std::fmod(s, 3.0);
    if (s < 0) s += 3.0;
    NervePoint p{0.0, 0.0, 0.0, true};
    if (s < 1.0) {
      p.p0 = 1.0 - s;
      p.p1 = s;
    } else if (s < 2.0) {
      p.p1 = 2.0 - s;
      p.p2 = s - 1.0;
    } else {
      p.p2 = 3.0 - s;
      p.p0 = s - 2.0;
    }
    return p;
  };

  std::vector<NervePoint> constant(400, boundary_point(0.2));
  CHECK(winding_number(constant) == 0);

  std::vector<NervePoint> once, reversed;
  for (int k = 0; k < 600; ++k) {
    once.push_back(boundary_point(3.0 * k / 600.0));
    reversed.push_back(boundary_point(-3.0 * k / 600.0));
  }
  CHECK(winding_number(once) == 1);
  CHECK(winding_number(reversed) == -1);

  // three samples jump exactly a third of the circumference each
  std::vector<NervePoint> sparse;
  for (int k = 0; k < 3; ++k) sparse.push_back(boundary_point(k + 0.1));
  CHECK_THROWS_AS(winding_number(sparse), ResolutionError);

  std::vector<NervePoint> invalid = once;
  invalid[3].valid = false;
  CHECK_THROWS_AS(winding_number(invalid), ArgumentError);
}

TEST_CASE("winding is invariant under cyclic relabeling of the loop") {
  Periods p = compute_periods();
  PWReport rep = pw_verify(14.0, UIntegrals::zero(), 720, {}, &p, true);
  REQUIRE(rep.all_valid);
  std::vector<NervePoint> loop;
  for (const auto& s : rep.diagnostics) loop.push_back(s.nerve);
  int base = winding_number(loop);
  for (int shift : {1, 97, 359}) {
    std::vector<NervePoint> rotated(loop.begin() + shift, loop.end());
    rotated.insert(rotated.end(), loop.begin(), loop.begin() + shift);
    CHECK(winding_number(rotated) == base);
  }
}

TEST_CASE("holonomy phases: trivial for u = 0") {
  Periods p = compute_periods();
  for (int sector : {2, 3, 4, 5}) {
    PolarParam prm(15.0, phi_for_sector_midpoint(sector));
    HolonomyCheckReport rep =
        holonomy_phase_check(sector, UIntegrals::zero(), prm, p);
    CHECK(rep.pass);
    for (const auto& row : rep.rows) {
      CHECK(std::abs(row.holonomy_phase) < 1e-15);
      CHECK(row.discrepancy < 1e-12);
    }
  }
}

TEST_CASE("holonomy phases: random u across S2..S5") {
  Periods p = compute_periods();
  std::mt19937_64 rng(89);
  for (int sector : {2, 3, 4, 5}) {
    PolarParam prm(15.0, phi_for_sector_midpoint(sector));
    for (int t = 0; t < 5; ++t) {
      UIntegrals u = UIntegrals::random(rng);
      HolonomyCheckReport rep = holonomy_phase_check(sector, u, prm, p);
      CHECK(rep.pass);
    }
  }
  CHECK_THROWS_AS(holonomy_phase_check(7, UIntegrals::zero(), PolarParam(15.0, 0.3), p),
                  ArgumentError);
}

TEST_CASE("pw verification at cbrt_R = 15") {
  Periods p = compute_periods();
  PWReport rep = pw_verify(15.0, UIntegrals::zero(), 1440, {}, &p, true);
  CHECK(rep.all_valid);
  CHECK(std::abs(rep.winding) == 1);
  CHECK(rep.pass);
  CHECK(rep.samples == 1440);
  REQUIRE(rep.diagnostics.size() == 1440);

  // the sweep visits the tube vertex near phi = pi and the (0, 1/2, 1/2)
  // region near phi = 0
  const PWSample& near_pi = rep.diagnostics[720];
  CHECK(near_pi.nerve.p0 == doctest::Approx(1.0).epsilon(1e-9));
  const PWSample& at_zero = rep.diagnostics[0];
  CHECK(at_zero.nerve.p0 == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(at_zero.nerve.p1 == doctest::Approx(0.5).epsilon(1e-6));

  // sector-to-limit assignment: Y-dominant sectors (j = 2,3 mod 4) sit near
  // the P2 edge, the others near the P1 edge
  for (const auto& s : rep.diagnostics) {
    if (s.sector == 0 || s.nerve.p0 > 1e-3) continue;
    int m = s.sector % 4;
    if (m == 2 || m == 3) {
      CHECK(s.nerve.p2 >= s.nerve.p1);
    } else {
      CHECK(s.nerve.p1 >= s.nerve.p2);
    }
  }
}

TEST_CASE("pw verification is stable under u draws and refinement") {
  Periods p = compute_periods();
  std::mt19937_64 rng(97);
  PWReport base = pw_verify(15.0, UIntegrals::zero(), 1440, {}, &p);
  PWReport fine = pw_verify(15.0, UIntegrals::zero(), 2880, {}, &p);
  CHECK(std::abs(base.winding) == 1);
  CHECK(fine.winding == base.winding);
  for (int t = 0; t < 10; ++t) {
    UIntegrals u = UIntegrals::random(rng);
    PWReport rep = pw_verify(15.0, u, 1440, {}, &p);
    CHECK(rep.all_valid);
    CHECK(std::abs(rep.winding) == 1);
  }
}

TEST_CASE("pw verification degrades gracefully") {
  Periods p = compute_periods();
  CHECK_THROWS_AS(pw_verify(15.0, UIntegrals::zero(), 100, {}, &p), ResolutionError);
  // far below the WKB regime the map leaves the nerve boundary
  PWReport tiny = pw_verify(0.3, UIntegrals::zero(), 1440, {}, &p);
  CHECK_FALSE(tiny.all_valid);
  CHECK_FALSE(tiny.invalid_phis.empty());
}
