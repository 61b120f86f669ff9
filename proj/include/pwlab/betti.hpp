#pragma once

#include <array>
#include <string>
#include <vector>

#include "pwlab/matrix3.hpp"

namespace pwlab {

/// Local eigenvalue data (lambda, mu, nu) at the three punctures, with the
/// elementary symmetric values sigma_1..3 and Newton power sums of each.
struct EigenvalueTriple {
  std::array<Complex, 3> v;
  Complex sigma1() const { return v[0] + v[1] + v[2]; }
  Complex sigma2() const { return v[0] * v[1] + v[0] * v[2] + v[1] * v[2]; }
  Complex sigma3() const { return v[0] * v[1] * v[2]; }
  Complex power1() const { return sigma1(); }
  Complex power2() const { return sigma1() * sigma1() - 2.0 * sigma2(); }
  Complex power3() const {
    return sigma1() * sigma1() * sigma1() - 3.0 * sigma1() * sigma2() + 3.0 * sigma3();
  }
};

struct EigenvalueData {
  EigenvalueTriple lambda, mu, nu;

  /// All three triples (1, eps, eps^2): sigma1 = sigma2 = 0, sigma3 = 1.
  static EigenvalueData special();
  /// lambda pairwise distinct and nonzero, or DegenerateEigenvalueError.
  void require_generic_lambda(double tol = 1e-12) const;
};

/// b22 = Q(b11), b33 = P(b11) from tr(B) and tr(AB).
struct LinearReduction {
  Complex b22, b33;
};
LinearReduction reduce_linear(const EigenvalueData& eig, Complex b11);

class ResampleNeeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point of the Betti surface: the matrix B together with the residuals of
/// the five defining trace constraints (tr B, tr B^2, tr B^3, tr AB,
/// tr (AB)^2).
struct SurfaceSample {
  Matrix3c B;
  Matrix3c A;  // diag(lambda)
  std::array<double, 5> residuals;
  double max_residual;
};

/// Solve the constraint chain at fixed off-diagonal parameters (v, w):
/// Y, Z linear in the two quadratic trace constraints, then the cubic in b11
/// from tr(B^3); root picked by root_index (companion-matrix eigenvalues,
/// sorted deterministically).
SurfaceSample sample_surface_point(const EigenvalueData& eig, Complex v, Complex w,
                                   int root_index = 0);

/// Left-hand side of the Lawton relation
/// x9^2 - x7 x8 x9 + 3 x9 + 9 - 6 x7 x8 + x7^3 + x8^3.
Complex lawton_residual(Complex x7, Complex x8, Complex x9);
ScaledComplex lawton_residual(const ScaledComplex& x7, const ScaledComplex& x8,
                              const ScaledComplex& x9);
/// Residual divided by the largest term magnitude (log-safe).
double lawton_relative_residual(const ScaledComplex& x7, const ScaledComplex& x8,
                                const ScaledComplex& x9);

/// Homogeneous cubic in three variables; ten coefficients in the fixed
/// monomial order 300, 210, 201, 120, 111, 102, 030, 021, 012, 003.
struct HomogeneousCubic {
  std::array<Complex, 10> c{};
  std::array<std::string, 3> vars{"X", "V", "W"};

  static const std::array<std::array<int, 3>, 10>& monomials();
  Complex& coeff(int i, int j, int k);
  Complex coeff(int i, int j, int k) const;
  Complex eval(const std::array<Complex, 3>& p) const;
  std::array<Complex, 3> gradient(const std::array<Complex, 3>& p) const;
  /// Hessian d^2F/dx_a dx_b (linear in p).
  Complex hessian(int a, int b, const std::array<Complex, 3>& p) const;
  double max_coeff_abs() const;
  bool is_zero() const;

  /// x7^3 + x8^3 - x7 x8 x9, the nodal compactifying cubic in trace
  /// coordinates.
  static HomogeneousCubic nodal_trace_cubic();
};

/// Compactifying divisor of the Betti surface as a plane cubic in (X, V, W),
/// with coefficients explicit rational functions of lambda (fixed once by the
/// trace-constraint elimination; the tests pin them against the node at
/// [(l2-l3)/(l3-l1) : (l1-l2)/(l3-l1) : 1]).
HomogeneousCubic divisor_cubic(const EigenvalueTriple& lambda);

enum class SingularityType { node, cusp, other };

struct SingularPoint {
  std::array<Complex, 3> point;  // projectively normalized, largest coord = 1
  SingularityType type;
  double gradient_residual;
  Complex hessian_det;
};

struct SingularityReport {
  std::vector<SingularPoint> points;
  int newton_starts;
  int newton_converged;
};

/// All projective singular points of the cubic (deterministic multistart
/// Newton over the three affine charts) with node/cusp classification.
SingularityReport singular_points(const HomogeneousCubic& cubic);

}  // namespace pwlab
