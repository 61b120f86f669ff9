#pragma once

#include <numbers>

#include "pwlab/quadrature.hpp"

namespace pwlab {

/// Primitive cube root of unity, e^(2*pi*i/3).
inline Complex cube_root_unity() {
  return Complex(-0.5, 0.5 * std::numbers::sqrt3);
}

/// Integer power of the cube root of unity, exact for the three residues.
inline Complex cube_root_unity_pow(int k) {
  switch (((k % 3) + 3) % 3) {
    case 0: return Complex(1.0, 0.0);
    case 1: return cube_root_unity();
    default: return std::conj(cube_root_unity());
  }
}

/// Base point t = cbrt_R^3 * e^(i*phi) of the Hitchin base, exposed through
/// the cube-root magnitude cbrt_R = |tau|. phi is kept as given (not reduced
/// mod 2*pi): the WKB formulas depend on phi/3, so angles beyond one turn
/// address different Stokes sectors of the same base point.
struct PolarParam {
  double cbrt_R;
  double phi;

  PolarParam(double cbrt_R_, double phi_) : cbrt_R(cbrt_R_), phi(phi_) {
    if (!(cbrt_R > 0.0)) throw ArgumentError("PolarParam: cbrt_R must be positive");
  }
  Complex tau() const { return std::polar(cbrt_R, phi / 3.0); }
  Complex t() const { return std::polar(cbrt_R * cbrt_R * cbrt_R, phi); }
  /// e^(i*phi/3), the phase factor entering every WKB exponent.
  Complex turn() const { return std::polar(1.0, phi / 3.0); }
};

/// The two period integrals pi_0, pi_1 and their difference.
struct Periods {
  Complex pi0;
  Complex pi1;
  Complex diff;  // pi0 - pi1
};

/// x = e^(i*phi/3) (pi0 - pi1) = a + b*i, the sector coordinate.
struct SectorPoint {
  double a;
  double b;
  Complex value() const { return Complex(a, b); }
  double arg() const { return std::arg(value()); }
  double abs() const { return std::abs(value()); }
};

/// Positive real branch of z^(-2/3) (z-1)^(-2/3) on (0,1), continued off the
/// interval through the principal power of z(z-1). Throws at the punctures.
Complex spectral_kernel(Complex z);

/// Sheet 1-form coefficient Q_j = eps^(j-1) * cbrt_R * e^(i*phi/3) *
/// z^(-2/3)(z-1)^(-2/3), j in 1..3.
Complex eigenform_Q(int sheet, const PolarParam& param, Complex z);

/// Period integrals along the real segments [0, 1/2] and [1, 1/2]; the disc
/// radius r only splits the improper integrals, the values are r-independent.
Periods compute_periods(double r = 0.1, double tol = 1e-12);

SectorPoint x_coordinate(const Periods& periods, double phi);

/// Numerical confirmation that the two puncture loop integrals coincide and
/// equal 3 r^(1/3) (eps - 1).
struct LoopCheckReport {
  Complex gamma0_value;
  Complex gamma1_value;
  Complex expected;
  double max_deviation;
  bool pass;
};

LoopCheckReport loop_period_equality_check(double r, double tol = 1e-10);

}  // namespace pwlab
