#pragma once

#include <array>
#include <random>

#include "pwlab/matrix3.hpp"
#include "pwlab/spectral.hpp"

namespace pwlab {

/// Abelian connection data: the purely imaginary path integrals of the
/// diagonal connection forms u_1, u_2, u_3. Each array stores the imaginary
/// parts (the values are i * entry); each triple sums to zero because the
/// determinant line is flat and trivial.
struct UIntegrals {
  std::array<double, 3> eta0{};    // int over eta_0 of u_i
  std::array<double, 3> eta1{};    // int over eta_1 of u_i
  std::array<double, 3> gamma0{};  // int over gamma_0 of u_i
  std::array<double, 3> gamma1{};  // int over gamma_1 of u_i

  static UIntegrals zero() { return {}; }
  static UIntegrals random(std::mt19937_64& rng, double scale = 1.0);
  void validate(double tol = 1e-9) const;

  std::array<double, 3> eta_diff() const;    // eta0 - eta1 componentwise
  std::array<double, 3> gamma_diff() const;  // gamma0 - gamma1
};

enum class Puncture { zero, one };
enum class MonodromyShape { a_shape, b_shape };

/// WKB monodromy around one puncture: three nonzero entries in the cyclic
/// companion pattern, positions (2,1), (3,2), (1,3).
struct MonodromyMatrix {
  std::array<ScaledComplex, 3> entries;  // slots (2,1), (3,2), (1,3)
  MonodromyShape shape;

  Matrix3s to_matrix() const {
    Matrix3s m;
    m(1, 0) = entries[0];
    m(2, 1) = entries[1];
    m(0, 2) = entries[2];
    return m;
  }
};

/// One exponential term of a trace coordinate: value = e^(real_exp + i*phase).
struct TraceTerm {
  double real_exp;  // cbrt_R * Re(...) part
  double phase;     // imaginary (abelian holonomy) part
  ScaledComplex value() const { return ScaledComplex::exp_form(real_exp, phase); }
};

struct TraceCoords {
  ScaledComplex X, Y, Z;
  // per-term breakdown (term j carries eps^(j-1) as printed); populated by the
  // closed-form route and consumed by the sector/dominance analysis
  std::array<TraceTerm, 3> x_terms{}, y_terms{}, z_terms{};
  bool has_terms = false;
};

/// WKB monodromy around the chosen puncture: exponentiated period data in the
/// cyclic companion pattern. The sheet labelling fixes slot (2,1) to the
/// eps^0 exponent, slot (3,2) to eps^2 and slot (1,3) to eps^1, with the
/// abelian phases paired so that tr(A B^-1) reproduces the closed form term
/// by term (see trace_coords_closed_form).
MonodromyMatrix build_monodromy(Puncture which, const PolarParam& param,
                                const Periods& periods, const UIntegrals& u);

/// X = tr(A B^-1), Y = tr(A^-1 B), Z = tr(A B A^-1 B^-1) by matrix algebra in
/// scaled arithmetic. No term breakdown (that is the closed form's job).
TraceCoords trace_coords_matrix(const MonodromyMatrix& A, const MonodromyMatrix& B);

/// The three-exponential closed forms of the trace coordinates, term by term,
/// with the per-term exponent/phase breakdown exposed.
TraceCoords trace_coords_closed_form(const PolarParam& param, const Periods& periods,
                                     const UIntegrals& u);

/// The nine Lawton trace coordinates (tr A, tr B, tr AB, tr A^-1, tr B^-1,
/// tr (AB)^-1, tr AB^-1, tr A^-1 B, tr ABA^-1B^-1).
std::array<ScaledComplex, 9> lawton_vector(const Matrix3s& A, const Matrix3s& B);

inline std::array<ScaledComplex, 9> lawton_vector(const MonodromyMatrix& A,
                                                  const MonodromyMatrix& B) {
  return lawton_vector(A.to_matrix(), B.to_matrix());
}

}  // namespace pwlab
