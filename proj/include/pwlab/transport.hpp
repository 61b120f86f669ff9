#pragma once

#include <vector>

#include "pwlab/monodromy.hpp"
#include "pwlab/ode.hpp"

namespace pwlab {

/// Sorted logarithms of the singular values of a transport map.
struct DilationSpectrum {
  std::array<double, 3> beta;  // descending
  double sum() const { return beta[0] + beta[1] + beta[2]; }
};

enum class TransportPath { eta0, eta1, gamma0, gamma1 };

/// Per-unit-cbrt_R dilation exponents of a non-critical path, sorted
/// descending: alpha_j = -Re(e^(i*phi/3) eps^(j-1)) * int over the path of
/// the spectral kernel dz.
struct AlphaExponents {
  std::array<double, 3> alpha;  // descending
  TransportPath path;
  double phi;
};

/// Log singular values in scaled arithmetic: generalized permutation matrices
/// are read off exactly; otherwise the largest exponent is factored out and
/// the bounded residue goes through an SVD.
DilationSpectrum dilation_spectrum(const Matrix3s& M);

AlphaExponents alpha_exponents(TransportPath path, double phi, double r = 0.1,
                               double tol = 1e-12);

/// Parallel transport of the diagonal model connection
/// d + diag(u_j + 2 Re(eps^(j-1) tau Q)) along a named path. Loops around the
/// punctures compose with the cyclic frame permutation T.
Matrix3s model_transport(TransportPath path, const PolarParam& param, const UIntegrals& u,
                         double r = 0.1, bool reverse = false);

struct ConvergenceRow {
  double cbrt_R;
  std::array<double, 3> beta_per_unit;       // dilation spectrum / cbrt_R
  std::array<double, 3> transport_exponent;  // quadrature route, sorted desc
  double max_difference;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  double max_difference;
};

/// Desk-scale form of the WKB dilation theorem on the model connection: for
/// each grid value, beta_j / cbrt_R minus the sorted per-unit transport
/// exponents (computed by independent quadrature of the kernel). The model is
/// exactly diagonal, so the difference is pure integrator noise.
ConvergenceReport wkb_convergence_check(TransportPath path, double phi,
                                        const std::vector<double>& cbrt_grid,
                                        const UIntegrals& u, double r = 0.1);

}  // namespace pwlab
