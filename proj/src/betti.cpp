#include "pwlab/betti.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "pwlab/spectral.hpp"

namespace pwlab {

EigenvalueData EigenvalueData::special() {
  Complex eps = cube_root_unity();
  EigenvalueTriple t{{Complex(1.0, 0.0), eps, eps * eps}};
  return EigenvalueData{t, t, t};
}

void EigenvalueData::require_generic_lambda(double tol) const {
  const auto& l = lambda.v;
  double scale = std::max({std::abs(l[0]), std::abs(l[1]), std::abs(l[2]), 1e-30});
  if (std::abs(l[0]) < tol * scale || std::abs(l[1]) < tol * scale ||
      std::abs(l[2]) < tol * scale)
    throw DegenerateEigenvalueError("lambda entries must be nonzero");
  if (std::abs(l[0] - l[1]) < tol * scale || std::abs(l[1] - l[2]) < tol * scale ||
      std::abs(l[0] - l[2]) < tol * scale)
    throw DegenerateEigenvalueError("lambda entries must be pairwise distinct");
}

LinearReduction reduce_linear(const EigenvalueData& eig, Complex b11) {
  const auto& l = eig.lambda.v;
  if (std::abs(l[1] - l[2]) < 1e-12 * std::max(std::abs(l[1]), std::abs(l[2])))
    throw DegenerateEigenvalueError("reduce_linear: lambda2 = lambda3");
  Complex m1 = eig.mu.sigma1();
  Complex n1 = eig.nu.sigma1();
  Complex d = l[1] - l[2];
  LinearReduction r;
  r.b22 = ((l[2] - l[0]) * b11 + n1 - l[2] * m1) / d;
  r.b33 = ((l[0] - l[1]) * b11 + l[1] * m1 - n1) / d;
  return r;
}

namespace {

// dense polynomial in one variable over Complex, lowest degree first
using Poly = std::vector<Complex>;

Poly pconst(Complex c) { return {c}; }
Poly pvar() { return {Complex(0, 0), Complex(1, 0)}; }

Poly padd(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Complex(0, 0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Poly pscale(const Poly& a, Complex s) {
  Poly r = a;
  for (auto& c : r) c *= s;
  return r;
}

Poly pmul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Complex(0, 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Complex peval(const Poly& a, Complex x) {
  Complex v(0, 0);
  for (size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

// roots of a cubic (or lower-degree) polynomial via the companion matrix
std::vector<Complex> poly_roots(Poly p) {
  while (!p.empty() && std::abs(p.back()) == 0.0) p.pop_back();
  if (p.size() < 2) return {};
  int n = int(p.size()) - 1;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -p[i] / p[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp);
  std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

}  // namespace

SurfaceSample sample_surface_point(const EigenvalueData& eig, Complex v, Complex w,
                                   int root_index) {
  eig.require_generic_lambda();
  const auto& l = eig.lambda.v;
  Complex p2mu = eig.mu.power2(), p3mu = eig.mu.power3(), p2nu = eig.nu.power2();

  // B(X) with Y(X), Z(X) eliminated from the two quadratic trace constraints:
  //   2Y + 2Z                  = p2(mu) - X^2 - Q^2 - P^2 - 2vw
  //   2 l1l2 Y + 2 l1l3 Z      = p2(nu) - l1^2 X^2 - l2^2 Q^2 - l3^2 P^2 - 2 l2l3 vw
  Poly X = pvar();
  Complex m1 = eig.mu.sigma1(), n1 = eig.nu.sigma1(), d = l[1] - l[2];
  Poly Q = padd(pscale(X, (l[2] - l[0]) / d), pconst((n1 - l[2] * m1) / d));
  Poly P = padd(pscale(X, (l[0] - l[1]) / d), pconst((l[1] * m1 - n1) / d));
  Poly X2 = pmul(X, X), Q2 = pmul(Q, Q), P2 = pmul(P, P);

  Poly rhs1 = padd(padd(pscale(X2, -1.0), pscale(Q2, -1.0)),
                   padd(pscale(P2, -1.0), pconst(p2mu - 2.0 * v * w)));
  Poly rhs2 = padd(padd(pscale(X2, -l[0] * l[0]), pscale(Q2, -l[1] * l[1])),
                   padd(pscale(P2, -l[2] * l[2]), pconst(p2nu - 2.0 * l[1] * l[2] * v * w)));
  // [2, 2; 2 l1l2, 2 l1l3] [Y; Z] = [rhs1; rhs2]
  Complex a11(2, 0), a12(2, 0), a21 = 2.0 * l[0] * l[1], a22 = 2.0 * l[0] * l[2];
  Complex det2 = a11 * a22 - a12 * a21;
  if (std::abs(det2) < 1e-12)
    throw DegenerateEigenvalueError("sample_surface_point: degenerate Y/Z system");
  Poly Y = pscale(padd(pscale(rhs1, a22), pscale(rhs2, -a12)), 1.0 / det2);
  Poly Z = pscale(padd(pscale(rhs2, a11), pscale(rhs1, -a21)), 1.0 / det2);

  // cubic in X from tr(B^3) = p3(mu), entries as polynomials
  std::array<std::array<Poly, 3>, 3> B = {{{X, Y, Z},
                                           {pconst(Complex(1, 0)), Q, pconst(v)},
                                           {pconst(Complex(1, 0)), pconst(w), P}}};
  Poly tr3 = pconst(Complex(0, 0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) tr3 = padd(tr3, pmul(B[i][j], pmul(B[j][k], B[k][i])));
  Poly cubic = padd(tr3, pconst(-p3mu));

  std::vector<Complex> roots = poly_roots(cubic);
  if (roots.empty()) throw ResampleNeeded("sample_surface_point: trace cubic degenerated");
  Complex x0 = roots[size_t(((root_index % int(roots.size())) + int(roots.size())) %
                            int(roots.size()))];

  SurfaceSample s;
  s.A = Matrix3c::Zero();
  s.A(0, 0) = l[0];
  s.A(1, 1) = l[1];
  s.A(2, 2) = l[2];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s.B(i, j) = peval(B[i][j], x0);
  Matrix3c AB = s.A * s.B;
  Matrix3c B2 = s.B * s.B;
  s.residuals[0] = std::abs(s.B.trace() - eig.mu.power1());
  s.residuals[1] = std::abs(B2.trace() - p2mu);
  s.residuals[2] = std::abs((B2 * s.B).trace() - p3mu);
  s.residuals[3] = std::abs(AB.trace() - eig.nu.power1());
  s.residuals[4] = std::abs((AB * AB).trace() - p2nu);
  s.max_residual = *std::max_element(s.residuals.begin(), s.residuals.end());
  return s;
}

Complex lawton_residual(Complex x7, Complex x8, Complex x9) {
  return x9 * x9 - x7 * x8 * x9 + 3.0 * x9 + 9.0 - 6.0 * x7 * x8 + x7 * x7 * x7 +
         x8 * x8 * x8;
}

ScaledComplex lawton_residual(const ScaledComplex& x7, const ScaledComplex& x8,
                              const ScaledComplex& x9) {
  ScaledComplex nine(Complex(9.0, 0.0)), three(Complex(3.0, 0.0)), six(Complex(6.0, 0.0));
  return x9 * x9 - x7 * x8 * x9 + three * x9 + nine - six * x7 * x8 + x7 * x7 * x7 +
         x8 * x8 * x8;
}

double lawton_relative_residual(const ScaledComplex& x7, const ScaledComplex& x8,
                                const ScaledComplex& x9) {
  ScaledComplex r = lawton_residual(x7, x8, x9);
  double scale = std::max({x9.log_abs() * 2.0, (x7 * x8 * x9).log_abs(),
                           x7.log_abs() * 3.0, x8.log_abs() * 3.0, 0.0});
  if (r.is_zero()) return 0.0;
  return std::exp(r.log_abs() - scale);
}

const std::array<std::array<int, 3>, 10>& HomogeneousCubic::monomials() {
  static const std::array<std::array<int, 3>, 10> m = {{{3, 0, 0},
                                                        {2, 1, 0},
                                                        {2, 0, 1},
                                                        {1, 2, 0},
                                                        {1, 1, 1},
                                                        {1, 0, 2},
                                                        {0, 3, 0},
                                                        {0, 2, 1},
                                                        {0, 1, 2},
                                                        {0, 0, 3}}};
  return m;
}

Complex& HomogeneousCubic::coeff(int i, int j, int k) {
  const auto& mono = monomials();
  for (size_t n = 0; n < mono.size(); ++n)
    if (mono[n][0] == i && mono[n][1] == j && mono[n][2] == k) return c[n];
  throw ArgumentError("HomogeneousCubic::coeff: not a degree-3 monomial");
}

Complex HomogeneousCubic::coeff(int i, int j, int k) const {
  return const_cast<HomogeneousCubic*>(this)->coeff(i, j, k);
}

Complex HomogeneousCubic::eval(const std::array<Complex, 3>& p) const {
  Complex v(0, 0);
  const auto& mono = monomials();
  for (size_t n = 0; n < mono.size(); ++n) {
    Complex t = c[n];
    for (int a = 0; a < 3; ++a)
      for (int e = 0; e < mono[n][a]; ++e) t *= p[a];
    v += t;
  }
  return v;
}

std::array<Complex, 3> HomogeneousCubic::gradient(const std::array<Complex, 3>& p) const {
  std::array<Complex, 3> g{Complex(0, 0), Complex(0, 0), Complex(0, 0)};
  const auto& mono = monomials();
  for (size_t n = 0; n < mono.size(); ++n) {
    for (int a = 0; a < 3; ++a) {
      if (mono[n][a] == 0) continue;
      Complex t = c[n] * double(mono[n][a]);
      for (int b = 0; b < 3; ++b) {
        int e = mono[n][b] - (b == a ? 1 : 0);
        for (int q = 0; q < e; ++q) t *= p[b];
      }
      g[a] += t;
    }
  }
  return g;
}

Complex HomogeneousCubic::hessian(int a, int b, const std::array<Complex, 3>& p) const {
  Complex h(0, 0);
  const auto& mono = monomials();
  for (size_t n = 0; n < mono.size(); ++n) {
    std::array<int, 3> e = mono[n];
    double factor = 1.0;
    factor *= e[a];
    if (e[a] == 0) continue;
    e[a] -= 1;
    factor *= e[b];
    if (e[b] == 0) continue;
    e[b] -= 1;
    Complex t = c[n] * factor;
    for (int q = 0; q < 3; ++q)
      for (int m = 0; m < e[q]; ++m) t *= p[q];
    h += t;
  }
  return h;
}

double HomogeneousCubic::max_coeff_abs() const {
  double m = 0.0;
  for (const auto& x : c) m = std::max(m, std::abs(x));
  return m;
}

bool HomogeneousCubic::is_zero() const { return max_coeff_abs() == 0.0; }

HomogeneousCubic HomogeneousCubic::nodal_trace_cubic() {
  HomogeneousCubic f;
  f.vars = {"x7", "x8", "x9"};
  f.coeff(3, 0, 0) = 1.0;
  f.coeff(0, 3, 0) = 1.0;
  f.coeff(1, 1, 1) = -1.0;
  return f;
}

HomogeneousCubic divisor_cubic(const EigenvalueTriple& lambda) {
  const auto& l = lambda.v;
  EigenvalueData chk;
  chk.lambda = lambda;
  chk.require_generic_lambda();
  Complex l1 = l[0], l2 = l[1], l3 = l[2];
  Complex d23 = l2 - l3;
  HomogeneousCubic f;
  f.coeff(3, 0, 0) = -3.0 * (l1 - l2) * (l1 - l2) * (l1 - l3) * (l1 - l3) * (l2 + l3) /
                     (l1 * d23 * d23 * d23 * d23);
  f.coeff(2, 1, 0) = 3.0 * (l1 - l3) * (l1 - l3) * (l1 * l3 - l2 * l2) / (l1 * d23 * d23 * d23);
  f.coeff(2, 0, 1) = 3.0 * (l1 - l2) * (l1 - l2) * (l3 * l3 - l1 * l2) / (l1 * d23 * d23 * d23);
  f.coeff(1, 1, 1) = -3.0 *
                     (l1 * d23 * d23 + l2 * (l1 - l3) * (l1 - l3) + l3 * (l1 - l2) * (l1 - l2)) /
                     (l1 * d23 * d23);
  f.coeff(0, 1, 2) = 3.0 * l2 * (l1 - l3) / (l1 * (l3 - l2));
  f.coeff(0, 2, 1) = 3.0 * l3 * (l1 - l2) / (l1 * d23);
  return f;
}

namespace {

struct NewtonHit {
  std::array<Complex, 3> p;
  double residual;
};

bool newton_chart(const HomogeneousCubic& f, int chart, Complex s0, Complex t0,
                  NewtonHit* hit) {
  int a = (chart + 1) % 3, b = (chart + 2) % 3;
  std::array<Complex, 3> p;
  p[chart] = 1.0;
  p[a] = s0;
  p[b] = t0;
  double scale = std::max(f.max_coeff_abs(), 1e-30);
  bool step_converged = false;
  for (int it = 0; it < 100; ++it) {
    auto g = f.gradient(p);
    // solve on the two gradient components transverse to the chart axis
    Complex j11 = f.hessian(a, a, p), j12 = f.hessian(a, b, p);
    Complex j21 = f.hessian(b, a, p), j22 = f.hessian(b, b, p);
    Complex det = j11 * j22 - j12 * j21;
    if (std::abs(det) < 1e-30) return false;
    Complex da = (-g[a] * j22 + g[b] * j12) / det;
    Complex db = (-g[b] * j11 + g[a] * j21) / det;
    p[a] += da;
    p[b] += db;
    if (std::abs(p[a]) > 1e8 || std::abs(p[b]) > 1e8) return false;
    if (std::abs(da) + std::abs(db) < 1e-13 * (1.0 + std::abs(p[a]) + std::abs(p[b]))) {
      step_converged = true;
      break;
    }
  }
  // stalled iterates in the flat valley around an ill-conditioned singular
  // point can pass a residual-only test; demand quadratic convergence
  if (!step_converged) return false;
  auto g = f.gradient(p);
  double pn = std::max({std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});
  double gn = std::sqrt(std::norm(g[0]) + std::norm(g[1]) + std::norm(g[2]));
  if (gn > 1e-9 * scale * pn * pn) return false;
  // the 2x2 solve also converges to critical points of the affine
  // restriction that are not on the curve; Euler's relation makes F vanish
  // at genuine singular points, so test it at the local evaluation scale
  double s_loc = 0.0;
  const auto& mono = HomogeneousCubic::monomials();
  for (size_t n = 0; n < mono.size(); ++n) {
    double t = std::abs(f.c[n]);
    for (int q = 0; q < 3; ++q)
      for (int e = 0; e < mono[n][q]; ++e) t *= std::abs(p[q]);
    s_loc += t;
  }
  if (std::abs(f.eval(p)) > 1e-9 * (s_loc + 1e-16 * scale * pn * pn * pn)) return false;
  // normalize: largest coordinate to 1
  int big = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(p[i]) > std::abs(p[big])) big = i;
  Complex inv = 1.0 / p[big];
  for (auto& x : p) x *= inv;
  auto g2 = f.gradient(p);
  hit->p = p;
  hit->residual = std::sqrt(std::norm(g2[0]) + std::norm(g2[1]) + std::norm(g2[2])) / scale;
  return hit->residual <= 1e-9;
}

SingularityType classify(const HomogeneousCubic& f, const std::array<Complex, 3>& p,
                         Complex* hdet_out) {
  // local affine function on the chart of the largest coordinate
  int chart = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(p[i]) > std::abs(p[chart])) chart = i;
  int a = (chart + 1) % 3, b = (chart + 2) % 3;
  Complex fss = f.hessian(a, a, p), fst = f.hessian(a, b, p), ftt = f.hessian(b, b, p);
  Complex hdet = fss * ftt - fst * fst;
  *hdet_out = hdet;
  double scale = std::max(f.max_coeff_abs(), 1e-30);
  // nondegeneracy is judged against the rounding noise of the determinant,
  // ~eps * (Hessian entry scale)^2, with four decades of safety margin:
  // shallow nodes (near-tangential branches) have small but clearly nonzero
  // determinants that a fixed fraction of the entry scale would misread
  double hscale = std::max({std::abs(fss), std::abs(fst), std::abs(ftt), 1e-30});
  if (std::abs(hdet) > 1e-12 * hscale * hscale) return SingularityType::node;
  // degenerate Hessian: cusp when the cubic term along the kernel direction
  // survives
  Complex ka, kb;
  if (std::abs(fss) + std::abs(fst) > std::abs(fst) + std::abs(ftt)) {
    ka = -fst;
    kb = fss;
  } else {
    ka = ftt;
    kb = -fst;
  }
  double kn = std::max(std::abs(ka), std::abs(kb));
  if (kn < 1e-12) {
    ka = 1.0;
    kb = 0.0;
  } else {
    ka /= kn;
    kb /= kn;
  }
  // third directional derivative of F along the kernel direction
  double h = 1.0;
  std::array<Complex, 3> q = p;
  auto at = [&](double s) {
    q = p;
    q[a] += s * h * ka;
    q[b] += s * h * kb;
    return f.eval(q);
  };
  Complex third = at(2.0) - 2.0 * at(1.0) + 2.0 * at(-1.0) - at(-2.0);  // 2 f''' h^3
  if (std::abs(third) > 1e-6 * scale) return SingularityType::cusp;
  return SingularityType::other;
}

}  // namespace

SingularityReport singular_points(const HomogeneousCubic& f) {
  if (f.is_zero()) throw ArgumentError("singular_points: zero cubic");
  SingularityReport rep;
  rep.newton_starts = 0;
  rep.newton_converged = 0;
  const double radii[3] = {0.3, 1.0, 3.0};
  const int n_angles = 6;
  for (int chart = 0; chart < 3; ++chart) {
    for (double rs : radii)
      for (double rt : radii)
        for (int ps = 0; ps < n_angles; ++ps)
          for (int pt = 0; pt < n_angles; ++pt) {
            ++rep.newton_starts;
            Complex s0 = std::polar(rs, 2.0 * std::numbers::pi * (ps + 0.37) / n_angles);
            Complex t0 = std::polar(rt, 2.0 * std::numbers::pi * (pt + 0.11) / n_angles);
            NewtonHit hit;
            if (!newton_chart(f, chart, s0, t0, &hit)) continue;
            ++rep.newton_converged;
            bool dup = false;
            for (const auto& s : rep.points) {
              double d = 0.0;
              for (int i = 0; i < 3; ++i) d += std::abs(s.point[i] - hit.p[i]);
              if (d < 1e-6) {
                dup = true;
                break;
              }
            }
            if (dup) continue;
            SingularPoint sp;
            sp.point = hit.p;
            sp.gradient_residual = hit.residual;
            sp.type = classify(f, hit.p, &sp.hessian_det);
            rep.points.push_back(sp);
          }
  }
  return rep;
}

}  // namespace pwlab
