#include "pwlab/monodromy.hpp"

#include <cmath>

namespace pwlab {

UIntegrals UIntegrals::random(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> dist(0.0, scale);
  auto triple = [&]() {
    std::array<double, 3> t;
    t[0] = dist(rng);
    t[1] = dist(rng);
    t[2] = -t[0] - t[1];
    return t;
  };
  UIntegrals u;
  u.eta0 = triple();
  u.eta1 = triple();
  u.gamma0 = triple();
  u.gamma1 = triple();
  return u;
}

void UIntegrals::validate(double tol) const {
  for (const auto* t : {&eta0, &eta1, &gamma0, &gamma1}) {
    double s = (*t)[0] + (*t)[1] + (*t)[2];
    double scale = std::max({1.0, std::abs((*t)[0]), std::abs((*t)[1]), std::abs((*t)[2])});
    if (std::abs(s) > tol * scale)
      throw ArgumentError("UIntegrals: triple does not sum to zero");
  }
}

std::array<double, 3> UIntegrals::eta_diff() const {
  return {eta0[0] - eta1[0], eta0[1] - eta1[1], eta0[2] - eta1[2]};
}

std::array<double, 3> UIntegrals::gamma_diff() const {
  return {gamma0[0] - gamma1[0], gamma0[1] - gamma1[1], gamma0[2] - gamma1[2]};
}

namespace {

// abelian phase combinations entering the trace coordinates: term j of X (and
// of Y, with opposite sign) carries P_j, term j of Z carries Q_j
std::array<double, 3> x_phases(const std::array<double, 3>& eta,
                               const std::array<double, 3>& gam) {
  return {eta[2] - eta[0] + gam[2],   // (u3 - u1; u3)
          eta[0] - eta[1] + gam[0],   // (u1 - u2; u1)
          eta[1] - eta[2] + gam[1]};  // (u2 - u3; u2)
}

std::array<double, 3> z_phases(const std::array<double, 3>& eta,
                               const std::array<double, 3>& gam) {
  return {2 * eta[2] - eta[0] - eta[1] + gam[2] - gam[1],
          2 * eta[0] - eta[1] - eta[2] + gam[0] - gam[2],
          2 * eta[1] - eta[2] - eta[0] + gam[1] - gam[0]};
}

}  // namespace

MonodromyMatrix build_monodromy(Puncture which, const PolarParam& param,
                                const Periods& periods, const UIntegrals& u) {
  u.validate();
  Complex piP = (which == Puncture::zero) ? periods.pi0 : periods.pi1;
  const auto& eta = (which == Puncture::zero) ? u.eta0 : u.eta1;
  const auto& gam = (which == Puncture::zero) ? u.gamma0 : u.gamma1;
  std::array<double, 3> ph = x_phases(eta, gam);
  Complex turn = param.turn();
  // slot powers (1, eps^2, eps): the sheet-start labelling under which the
  // matrix products reproduce the closed-form trace coordinates
  std::array<Complex, 3> pw = {Complex(1.0, 0.0), cube_root_unity_pow(2),
                               cube_root_unity_pow(1)};
  std::array<int, 3> phase_of_slot = {0, 2, 1};
  MonodromyMatrix m;
  m.shape = (which == Puncture::zero) ? MonodromyShape::a_shape : MonodromyShape::b_shape;
  for (int s = 0; s < 3; ++s) {
    double re = param.cbrt_R * (pw[s] * turn * piP).real();
    m.entries[s] = ScaledComplex::exp_form(re, ph[phase_of_slot[s]]);
  }
  return m;
}

TraceCoords trace_coords_matrix(const MonodromyMatrix& A, const MonodromyMatrix& B) {
  for (const auto& e : A.entries)
    if (e.is_zero()) throw ArgumentError("trace_coords_matrix: singular A");
  for (const auto& e : B.entries)
    if (e.is_zero()) throw ArgumentError("trace_coords_matrix: singular B");
  Matrix3s a = A.to_matrix(), b = B.to_matrix();
  Matrix3s ai = inverse(a), bi = inverse(b);
  TraceCoords tc;
  tc.X = trace(a * bi);
  tc.Y = trace(ai * b);
  tc.Z = trace(a * (b * (ai * bi)));
  tc.has_terms = false;
  return tc;
}

TraceCoords trace_coords_closed_form(const PolarParam& param, const Periods& periods,
                                     const UIntegrals& u) {
  u.validate();
  std::array<double, 3> ed = u.eta_diff(), gd = u.gamma_diff();
  std::array<double, 3> P = x_phases(ed, gd);
  std::array<double, 3> Q = z_phases(ed, gd);
  Complex x = param.turn() * periods.diff;
  Complex one_minus_eps = Complex(1.0, 0.0) - cube_root_unity();
  TraceCoords tc;
  tc.has_terms = true;
  for (int j = 0; j < 3; ++j) {
    Complex epsj = cube_root_unity_pow(j);
    tc.x_terms[j] = TraceTerm{param.cbrt_R * (epsj * x).real(), P[j]};
    tc.y_terms[j] = TraceTerm{-param.cbrt_R * (epsj * x).real(), -P[j]};
    tc.z_terms[j] = TraceTerm{param.cbrt_R * (one_minus_eps * epsj * x).real(), Q[j]};
  }
  auto sum3 = [](const std::array<TraceTerm, 3>& t) {
    return t[0].value() + t[1].value() + t[2].value();
  };
  tc.X = sum3(tc.x_terms);
  tc.Y = sum3(tc.y_terms);
  tc.Z = sum3(tc.z_terms);
  return tc;
}

std::array<ScaledComplex, 9> lawton_vector(const Matrix3s& A, const Matrix3s& B) {
  if (det(A).is_zero() || det(B).is_zero())
    throw ArgumentError("lawton_vector: singular input");
  Matrix3s Ai = inverse(A), Bi = inverse(B);
  Matrix3s AB = A * B;
  return {trace(A),      trace(B),       trace(AB),
          trace(Ai),     trace(Bi),      trace(inverse(AB)),
          trace(A * Bi), trace(Ai * B),  trace(AB * (Ai * Bi))};
}

}  // namespace pwlab
