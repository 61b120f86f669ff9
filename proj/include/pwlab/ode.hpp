#pragma once

#include <functional>

#include "pwlab/matrix3.hpp"
#include "pwlab/quadrature.hpp"

namespace pwlab {

/// Time-dependent 3x3 coefficient of dY/dt = B(t) Y on [0,1].
using OdeCoefficient = std::function<Matrix3c(double t)>;

struct OdeOptions {
  double tol = 1e-10;
  int max_steps = 1 << 20;
  /// Diagonal coefficients are detected and integrated in log space
  /// (exponential of the entrywise integral). Disable to force the generic
  /// stepper, e.g. when using the ODE as an independent verification route.
  bool allow_diagonal_shortcut = true;
};

/// Fundamental solution Y(1) of dY/dt = B(t) Y, Y(0) = id, by an adaptive
/// embedded Runge-Kutta-Fehlberg 4(5) stepper. Throws IntegrationError on
/// step-size underflow.
Matrix3s ode_fundamental(const OdeCoefficient& coeff, const OdeOptions& opt = {});

}  // namespace pwlab
