#include "pwlab/ode.hpp"

#include <cmath>

namespace pwlab {

namespace {

bool is_diagonal_everywhere(const OdeCoefficient& coeff) {
  for (double t : {0.0, 0.1234, 0.3711, 0.5, 0.7093, 0.9377, 1.0}) {
    Matrix3c b = coeff(t);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && b(i, j) != Complex(0.0, 0.0)) return false;
  }
  return true;
}

Matrix3s diagonal_log_space(const OdeCoefficient& coeff, const OdeOptions& opt) {
  QuadratureOptions q;
  q.abs_tol = q.rel_tol = opt.tol * 1e-2;
  Matrix3s y;
  for (int j = 0; j < 3; ++j) {
    PathSpec unit = PathSpec::segment(Complex(0.0, 0.0), Complex(1.0, 0.0));
    Complex total = integrate_path(
        unit, [&coeff, j](Complex z) { return coeff(z.real())(j, j); }, q);
    y(j, j) = ScaledComplex::exp(total);
  }
  return y;
}

// Fehlberg 4(5) tableau
constexpr double kA[6] = {0.0, 1.0 / 4, 3.0 / 8, 12.0 / 13, 1.0, 1.0 / 2};
constexpr double kB[6][5] = {
    {},
    {1.0 / 4},
    {3.0 / 32, 9.0 / 32},
    {1932.0 / 2197, -7200.0 / 2197, 7296.0 / 2197},
    {439.0 / 216, -8.0, 3680.0 / 513, -845.0 / 4104},
    {-8.0 / 27, 2.0, -3544.0 / 2565, 1859.0 / 4104, -11.0 / 40}};
constexpr double kC5[6] = {16.0 / 135, 0.0, 6656.0 / 12825, 28561.0 / 56430, -9.0 / 50,
                           2.0 / 55};
constexpr double kC4[6] = {25.0 / 216, 0.0, 1408.0 / 2565, 2197.0 / 4104, -1.0 / 5, 0.0};

}  // namespace

Matrix3s ode_fundamental(const OdeCoefficient& coeff, const OdeOptions& opt) {
  if (opt.allow_diagonal_shortcut && is_diagonal_everywhere(coeff))
    return diagonal_log_space(coeff, opt);

  Matrix3c y = Matrix3c::Identity();
  double t = 0.0, h = 1e-2;
  int steps = 0;
  while (t < 1.0) {
    if (++steps > opt.max_steps) throw IntegrationError("ode_fundamental: step budget exceeded");
    if (h < 1e-14) throw IntegrationError("ode_fundamental: step-size underflow");
    h = std::min(h, 1.0 - t);
    Matrix3c k[6];
    for (int s = 0; s < 6; ++s) {
      Matrix3c ys = y;
      for (int j = 0; j < s; ++j) ys += h * kB[s][j] * k[j];
      k[s] = coeff(t + kA[s] * h) * ys;
    }
    Matrix3c y5 = y, y4 = y;
    for (int s = 0; s < 6; ++s) {
      y5 += h * kC5[s] * k[s];
      y4 += h * kC4[s] * k[s];
    }
    double err = (y5 - y4).cwiseAbs().maxCoeff();
    double scale = std::max(1.0, y5.cwiseAbs().maxCoeff());
    if (err <= opt.tol * scale) {
      t += h;
      y = y5;
    }
    double ratio = (err > 0.0) ? std::pow(opt.tol * scale / err, 0.2) : 4.0;
    h *= std::clamp(0.9 * ratio, 0.2, 4.0);
  }
  return Matrix3s::from_complex(y);
}

}  // namespace pwlab
