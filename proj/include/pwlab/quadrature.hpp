#pragma once

#include <functional>

#include "pwlab/paths.hpp"

namespace pwlab {

using BranchedIntegrand = std::function<Complex(Complex z, const BranchState& state)>;
using PlainIntegrand = std::function<Complex(Complex z)>;
using RealIntegrand = std::function<double(double t)>;

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_depth = 50;
};

/// Adaptive Gauss-Kronrod contour integral of f(z) dz along the path, with a
/// branch state threaded continuously (left to right) through every
/// evaluation point. The state, if given, is advanced to the path end.
Complex integrate_path(const PathSpec& path, const BranchedIntegrand& f,
                       const QuadratureOptions& opt, BranchState* state);

Complex integrate_path(const PathSpec& path, const PlainIntegrand& f,
                       const QuadratureOptions& opt = {});

inline Complex integrate_path(const PathSpec& path, const PlainIntegrand& f, double tol) {
  QuadratureOptions opt;
  opt.abs_tol = opt.rel_tol = tol;
  return integrate_path(path, f, opt);
}

/// Adaptive quadrature of a real integrand on [a,b] (no endpoint singularity).
double integrate_real(const RealIntegrand& f, double a, double b,
                      const QuadratureOptions& opt = {});

/// Improper integral of t^p (1-t)^q over [a,b] in [0,1], positive real
/// branch, with p, q in {0, -2/3}. Endpoint singularities are removed by the
/// substitutions t = s^3 at 0 and 1-t = s^3 at 1.
double integrate_endpoint_singular(double a, double b, double p = -2.0 / 3.0,
                                   double q = -2.0 / 3.0, const QuadratureOptions& opt = {});

/// Continue a tracked cube-root argument along a path (winding of z - base).
/// One positive loop around the base multiplies the root (.)^(1/3) by
/// e^(2*pi*i/3).
BranchState continue_cube_root(BranchState state, const PathSpec& path);

/// Root multiplier e^(i * (lift_end - lift_start)/3) between two states of the
/// same tracked point.
Complex cube_root_multiplier(const BranchState& before, const BranchState& after);

}  // namespace pwlab
