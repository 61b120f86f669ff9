#include "pwlab/spectral.hpp"

#include <cmath>

namespace pwlab {

Complex spectral_kernel(Complex z) {
  if (std::abs(z) < 1e-14 || std::abs(z - 1.0) < 1e-14)
    throw SingularityError("spectral_kernel: z at a puncture");
  // z(z-1) < 0 on (0,1); the e^(2*pi*i/3) prefactor turns the principal
  // power's e^(-2*pi*i/3) into the positive real branch there
  Complex w = z * (z - 1.0);
  return cube_root_unity() * std::pow(w, Complex(-2.0 / 3.0, 0.0));
}

Complex eigenform_Q(int sheet, const PolarParam& param, Complex z) {
  if (sheet < 1 || sheet > 3) throw ArgumentError("eigenform_Q: sheet must be 1..3");
  return cube_root_unity_pow(sheet - 1) * param.cbrt_R * param.turn() * spectral_kernel(z);
}

Periods compute_periods(double r, double tol) {
  if (!(r > 0.0 && r < 0.25)) throw ArgumentError("compute_periods: need 0 < r < 1/4");
  if (!(tol > 0.0)) throw ArgumentError("compute_periods: tol must be positive");
  QuadratureOptions opt;
  opt.abs_tol = opt.rel_tol = tol;
  // sigma_0 * eta_0^{-1} is the real segment 0 -> 1/2, split at r; likewise
  // sigma_1 * eta_1^{-1} is 1 -> 1/2 (negative orientation of [1/2, 1])
  double head0 = integrate_endpoint_singular(0.0, r, -2.0 / 3.0, -2.0 / 3.0, opt);
  double tail0 = integrate_endpoint_singular(r, 0.5, -2.0 / 3.0, -2.0 / 3.0, opt);
  double head1 = integrate_endpoint_singular(1.0 - r, 1.0, -2.0 / 3.0, -2.0 / 3.0, opt);
  double tail1 = integrate_endpoint_singular(0.5, 1.0 - r, -2.0 / 3.0, -2.0 / 3.0, opt);
  Complex eps = cube_root_unity();
  Periods p;
  p.pi0 = 2.0 * (eps - 1.0) * (head0 + tail0);
  p.pi1 = -2.0 * (eps - 1.0) * (head1 + tail1);
  p.diff = p.pi0 - p.pi1;
  return p;
}

SectorPoint x_coordinate(const Periods& periods, double phi) {
  Complex x = std::polar(1.0, phi / 3.0) * periods.diff;
  return SectorPoint{x.real(), x.imag()};
}

LoopCheckReport loop_period_equality_check(double r, double tol) {
  if (!(r > 0.0)) throw ArgumentError("loop_period_equality_check: r must be positive");
  QuadratureOptions opt;
  opt.abs_tol = opt.rel_tol = std::min(tol * 1e-2, 1e-12);

  PathSpec g0 = PathSpec::circle(Complex(0.0, 0.0), r);
  BranchState s0 = BranchState::at(Complex(0.0, 0.0), g0.start());
  Complex v0 = integrate_path(
      g0, [](Complex, const BranchState& st) { return st.lifted_power(-2.0 / 3.0); }, opt,
      &s0);

  // both loops start at local angle 0 so the two branches match; starting
  // gamma_1 at 1-r would rotate its value by e^(i*pi/3)
  PathSpec g1 = PathSpec::circle(Complex(1.0, 0.0), r, true, 0.0);
  BranchState s1 = BranchState::at(Complex(1.0, 0.0), g1.start());
  Complex v1 = integrate_path(
      g1, [](Complex, const BranchState& st) { return st.lifted_power(-2.0 / 3.0); }, opt,
      &s1);

  LoopCheckReport rep;
  rep.gamma0_value = v0;
  rep.gamma1_value = v1;
  rep.expected = 3.0 * std::cbrt(r) * (cube_root_unity() - 1.0);
  double scale = std::abs(rep.expected);
  rep.max_deviation =
      std::max(std::abs(v0 - rep.expected), std::abs(v1 - rep.expected)) / scale;
  rep.max_deviation = std::max(rep.max_deviation, std::abs(v0 - v1) / scale);
  rep.pass = rep.max_deviation <= tol;
  return rep;
}

}  // namespace pwlab
