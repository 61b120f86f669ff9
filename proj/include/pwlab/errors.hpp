#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace pwlab {

using Complex = std::complex<double>;

/// Thrown when an operation receives arguments outside its contract.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature did not reach the requested tolerance.
/// Carries the best estimate and its error bound.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, Complex best, double error_bound)
      : std::runtime_error(what), best_estimate(best), error_estimate(error_bound) {}
  Complex best_estimate;
  double error_estimate;
};

/// ODE step-size underflow or non-convergence.
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A path passed through (or too close to) a tracked branch point.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Angle hits a critical value where the requested quantity degenerates.
class CriticalityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// arg(x) lies on a Stokes ray; dominance ordering is ambiguous there.
class RayAmbiguityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Loop sampling too coarse for a reliable winding number.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigenvalue data violates a distinctness precondition.
class DegenerateEigenvalueError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

}  // namespace pwlab
