#include "pwlab/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace pwlab {

namespace {

// (G7, K15) pair, nodes/weights on [-1, 1]
constexpr int kNK = 15;
constexpr double kXK[kNK] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
constexpr double kWK[kNK] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
// Gauss weights sit at the odd Kronrod indices 1,3,...,13
constexpr double kWG[7] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469, 0.381830050505119, 0.279705391489277,
                           0.129484966168870};

struct PanelResult {
  Complex value;
  double error;
};

// One (G7,K15) pass over path parameter [t0,t1] of a single piece; evaluations
// run in increasing t so the branch state can be threaded through them.
PanelResult eval_panel(const PathSpec::Piece& piece, double t0, double t1,
                       const BranchedIntegrand& f, BranchState* state) {
  double c = 0.5 * (t0 + t1), h = 0.5 * (t1 - t0);
  Complex k(0.0, 0.0), g(0.0, 0.0);
  for (int i = 0; i < kNK; ++i) {
    double t = c + h * kXK[i];
    Complex z = PathSpec::piece_point(piece, t);
    if (state) state->advance(z);
    Complex val = f(z, state ? *state : BranchState{}) * PathSpec::piece_velocity(piece, t);
    k += kWK[i] * val;
    if (i % 2 == 1) g += kWG[i / 2] * val;
  }
  k *= h;
  g *= h;
  double err = std::abs(k - g);
  // QUADPACK-style sharpening of the raw difference
  if (err > 0.0) err = std::min(err, std::pow(200.0 * err, 1.5));
  return {k, err};
}

struct Accumulator {
  Complex total{0.0, 0.0};
  double err_total = 0.0;
};

// Depth-first, left-to-right adaptive bisection. The branch state passed in is
// advanced monotonically; a rejected panel's trial evaluations are discarded
// by working on a copy.
void integrate_piece(const PathSpec::Piece& piece, double t0, double t1, double tol_here,
                     const BranchedIntegrand& f, BranchState* state, int depth,
                     const QuadratureOptions& opt, Accumulator& acc) {
  BranchState trial = state ? *state : BranchState{};
  PanelResult r = eval_panel(piece, t0, t1, f, state ? &trial : nullptr);
  if (r.error <= tol_here || depth >= opt.max_depth) {
    if (depth >= opt.max_depth && r.error > tol_here * 16.0)
      throw QuadratureError("integrate_path: max refinement depth reached",
                            acc.total + r.value, acc.err_total + r.error);
    acc.total += r.value;
    acc.err_total += r.error;
    if (state) {
      *state = trial;
      state->advance(PathSpec::piece_point(piece, t1));
    }
    return;
  }
  double tm = 0.5 * (t0 + t1);
  integrate_piece(piece, t0, tm, 0.5 * tol_here, f, state, depth + 1, opt, acc);
  integrate_piece(piece, tm, t1, 0.5 * tol_here, f, state, depth + 1, opt, acc);
}

}  // namespace

Complex integrate_path(const PathSpec& path, const BranchedIntegrand& f,
                       const QuadratureOptions& opt, BranchState* state) {
  if (path.pieces.empty()) throw ArgumentError("integrate_path: empty path");
  double total_len = std::max(path.length(), 1e-300);
  Accumulator acc;
  for (const auto& piece : path.pieces) {
    // arcs pre-split so each panel subtends well under pi around any point
    int initial = std::holds_alternative<PathSpec::Arc>(piece) ? 8 : 2;
    double piece_tol =
        std::max(opt.abs_tol, opt.rel_tol * std::abs(acc.total)) *
        (PathSpec::piece_length(piece) / total_len);
    if (state) state->advance(PathSpec::piece_point(piece, 0.0));
    for (int s = 0; s < initial; ++s) {
      double t0 = double(s) / initial, t1 = double(s + 1) / initial;
      integrate_piece(piece, t0, t1, std::max(piece_tol / initial, 1e-300), f, state, 0,
                      opt, acc);
    }
  }
  double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(acc.total));
  if (acc.err_total > tol * 64.0)
    throw QuadratureError("integrate_path: tolerance not reached", acc.total, acc.err_total);
  return acc.total;
}

Complex integrate_path(const PathSpec& path, const PlainIntegrand& f,
                       const QuadratureOptions& opt) {
  return integrate_path(
      path, [&f](Complex z, const BranchState&) { return f(z); }, opt, nullptr);
}

double integrate_real(const RealIntegrand& f, double a, double b,
                      const QuadratureOptions& opt) {
  if (a == b) return 0.0;
  PathSpec seg = PathSpec::segment(Complex(a, 0.0), Complex(b, 0.0));
  Complex v = integrate_path(
      seg, [&f](Complex z, const BranchState&) { return Complex(f(z.real()), 0.0); }, opt,
      nullptr);
  return v.real();
}

namespace {

// int over [a,b] of t^(-2/3) * extra(t) with the endpoint at 0 removed by
// t = s^3: 3 * int over [a^(1/3), b^(1/3)] of extra(s^3) ds.
double left_cube_sub(double a, double b, const RealIntegrand& extra,
                     const QuadratureOptions& opt) {
  double sa = std::cbrt(a), sb = std::cbrt(b);
  return integrate_real([&extra](double s) { return 3.0 * extra(s * s * s); }, sa, sb, opt);
}

bool is_exponent(double v, double target) { return std::abs(v - target) < 1e-14; }

}  // namespace

double integrate_endpoint_singular(double a, double b, double p, double q,
                                   const QuadratureOptions& opt) {
  if (a < 0.0 || b > 1.0 || a > b)
    throw ArgumentError("integrate_endpoint_singular: need 0 <= a <= b <= 1");
  bool p_sing = is_exponent(p, -2.0 / 3.0), q_sing = is_exponent(q, -2.0 / 3.0);
  if ((!p_sing && !is_exponent(p, 0.0)) || (!q_sing && !is_exponent(q, 0.0)))
    throw ArgumentError("integrate_endpoint_singular: exponents must be 0 or -2/3");
  if (a == b) return 0.0;

  auto full = [&](double t) {
    double v = 1.0;
    if (p_sing) v *= std::pow(t, -2.0 / 3.0);
    if (q_sing) v *= std::pow(1.0 - t, -2.0 / 3.0);
    return v;
  };
  auto q_factor = [&](double t) { return q_sing ? std::pow(1.0 - t, -2.0 / 3.0) : 1.0; };
  auto p_factor = [&](double t) { return p_sing ? std::pow(t, -2.0 / 3.0) : 1.0; };

  double mid_lo = (p_sing && a < 0.25) ? 0.25 : a;
  double mid_hi = (q_sing && b > 0.75) ? 0.75 : b;
  mid_lo = std::min(mid_lo, b);
  mid_hi = std::max(mid_hi, a);

  double total = 0.0;
  if (p_sing && a < 0.25) total += left_cube_sub(a, mid_lo, q_factor, opt);
  if (q_sing && b > 0.75)
    // mirrored: y = 1 - t, so the remaining factor is evaluated at t = 1 - y
    total += left_cube_sub(1.0 - b, 1.0 - mid_hi,
                           [&p_factor](double y) { return p_factor(1.0 - y); }, opt);
  if (mid_hi > mid_lo) total += integrate_real(full, mid_lo, mid_hi, opt);
  return total;
}

BranchState continue_cube_root(BranchState state, const PathSpec& path) {
  // walk with steps short enough that each argument increment is < pi/2
  for (const auto& piece : path.pieces) {
    double len = PathSpec::piece_length(piece);
    double clearance = std::abs(PathSpec::piece_point(piece, 0.0) - state.base);
    for (int probe = 0; probe <= 16; ++probe)
      clearance = std::min(clearance,
                           std::abs(PathSpec::piece_point(piece, probe / 16.0) - state.base));
    if (clearance < 1e-13)
      throw SingularityError("continue_cube_root: path passes through branch point");
    int n = std::max(16, int(std::ceil(4.0 * len / clearance)));
    state.advance(PathSpec::piece_point(piece, 0.0));
    for (int i = 1; i <= n; ++i) state.advance(PathSpec::piece_point(piece, double(i) / n));
  }
  return state;
}

Complex cube_root_multiplier(const BranchState& before, const BranchState& after) {
  double d = (after.lifted_arg - before.lifted_arg) / 3.0;
  return std::polar(1.0, d);
}

}  // namespace pwlab
