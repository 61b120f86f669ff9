#include "pwlab/transport.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace pwlab {

namespace {
constexpr double kPi = std::numbers::pi;

bool first_kind_critical(double phi, double tol = 1e-12) {
  double m = std::fmod(std::abs(phi), kPi);
  return m < tol || kPi - m < tol;
}

// line integral of the spectral kernel along the named eta path (real
// segments; the kernel is positive there, the orientation makes it negative)
double eta_kernel_integral(TransportPath path, double r, double tol) {
  QuadratureOptions opt;
  opt.abs_tol = opt.rel_tol = tol;
  double I_r = integrate_endpoint_singular(r, 0.5, -2.0 / 3.0, -2.0 / 3.0, opt);
  // eta_0: 1/2 -> r and eta_1: 1/2 -> 1-r both run against the positive
  // orientation of the kernel integral
  (void)path;
  return -I_r;
}

}  // namespace

DilationSpectrum dilation_spectrum(const Matrix3s& M) {
  // generalized permutation matrices (the model transports) are exact
  int nonzero = 0;
  std::array<int, 3> row_of_col{-1, -1, -1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!M(i, j).is_zero()) {
        ++nonzero;
        row_of_col[j] = i;
      }
  if (nonzero == 3 && row_of_col[0] >= 0 && row_of_col[1] >= 0 && row_of_col[2] >= 0 &&
      row_of_col[0] != row_of_col[1] && row_of_col[1] != row_of_col[2] &&
      row_of_col[0] != row_of_col[2]) {
    DilationSpectrum s;
    int k = 0;
    for (int j = 0; j < 3; ++j) s.beta[k++] = M(row_of_col[j], j).log_abs();
    std::sort(s.beta.begin(), s.beta.end(), std::greater<double>());
    return s;
  }
  double scale = M.max_log_abs();
  if (!std::isfinite(scale)) throw ArgumentError("dilation_spectrum: zero matrix");
  Matrix3c residue = M.to_complex_scaled(scale);
  Eigen::JacobiSVD<Matrix3c> svd(residue);
  DilationSpectrum s;
  for (int i = 0; i < 3; ++i) {
    double sv = svd.singularValues()(i);
    if (sv <= 0.0) throw ArgumentError("dilation_spectrum: singular matrix");
    s.beta[i] = scale + std::log(sv);
  }
  std::sort(s.beta.begin(), s.beta.end(), std::greater<double>());
  return s;
}

AlphaExponents alpha_exponents(TransportPath path, double phi, double r, double tol) {
  if (path != TransportPath::eta0 && path != TransportPath::eta1)
    throw ArgumentError("alpha_exponents: defined for the eta paths");
  if (first_kind_critical(phi))
    throw CriticalityError("alpha_exponents: phi is critical of the first kind");
  double L = eta_kernel_integral(path, r, tol);
  Complex turn = std::polar(1.0, phi / 3.0);
  AlphaExponents a;
  a.path = path;
  a.phi = phi;
  for (int j = 0; j < 3; ++j)
    a.alpha[j] = -(turn * cube_root_unity_pow(j)).real() * L;
  std::sort(a.alpha.begin(), a.alpha.end(), std::greater<double>());
  return a;
}

Matrix3s model_transport(TransportPath path, const PolarParam& param, const UIntegrals& u,
                         double r, bool reverse) {
  u.validate();
  Complex turn = param.turn();
  Matrix3s m;
  if (path == TransportPath::eta0 || path == TransportPath::eta1) {
    double L = eta_kernel_integral(path, r, 1e-13);
    const auto& uu = (path == TransportPath::eta0) ? u.eta0 : u.eta1;
    for (int j = 0; j < 3; ++j) {
      double re = 2.0 * param.cbrt_R * (turn * cube_root_unity_pow(j)).real() * L;
      if (reverse) {
        m(j, j) = ScaledComplex::exp_form(-re, -uu[j]);
      } else {
        m(j, j) = ScaledComplex::exp_form(re, uu[j]);
      }
    }
    return m;
  }
  // loop transport: T . diag(exp(2 cbrt_R r^(1/3) Re(e^(i phi/3) eps^(j-1)
  // 3(eps-1)) + i int u_j)), reversed loops invert and permute back
  Complex loop = 3.0 * std::cbrt(r) * (cube_root_unity() - 1.0);
  const auto& uu = (path == TransportPath::gamma0) ? u.gamma0 : u.gamma1;
  std::array<ScaledComplex, 3> d;
  for (int j = 0; j < 3; ++j) {
    double re = 2.0 * param.cbrt_R * (turn * cube_root_unity_pow(j) * loop).real();
    d[j] = ScaledComplex::exp_form(re, uu[j]);
  }
  Matrix3s diag;
  diag(0, 0) = d[0];
  diag(1, 1) = d[1];
  diag(2, 2) = d[2];
  Matrix3s T;  // cyclic frame permutation
  T(1, 0) = ScaledComplex(1.0);
  T(2, 1) = ScaledComplex(1.0);
  T(0, 2) = ScaledComplex(1.0);
  Matrix3s fwd = T * diag;
  return reverse ? inverse(fwd) : fwd;
}

ConvergenceReport wkb_convergence_check(TransportPath path, double phi,
                                        const std::vector<double>& cbrt_grid,
                                        const UIntegrals& u, double r) {
  if (first_kind_critical(phi))
    throw CriticalityError("wkb_convergence_check: phi is critical of the first kind");
  if (cbrt_grid.empty()) throw ArgumentError("wkb_convergence_check: empty grid");
  double L = eta_kernel_integral(path, r, 1e-13);
  Complex turn = std::polar(1.0, phi / 3.0);
  std::array<double, 3> nu;
  for (int j = 0; j < 3; ++j)
    nu[j] = 2.0 * (turn * cube_root_unity_pow(j)).real() * L;
  std::sort(nu.begin(), nu.end(), std::greater<double>());

  ConvergenceReport rep;
  rep.max_difference = 0.0;
  for (double cb : cbrt_grid) {
    Matrix3s tr = model_transport(path, PolarParam(cb, phi), u, r);
    DilationSpectrum sp = dilation_spectrum(tr);
    ConvergenceRow row;
    row.cbrt_R = cb;
    row.transport_exponent = nu;
    double md = 0.0;
    for (int j = 0; j < 3; ++j) {
      row.beta_per_unit[j] = sp.beta[j] / cb;
      md = std::max(md, std::abs(row.beta_per_unit[j] - nu[j]));
    }
    row.max_difference = md;
    rep.max_difference = std::max(rep.max_difference, md);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace pwlab
