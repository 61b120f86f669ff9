#include "pwlab/nerve.hpp"

#include <cmath>
#include <numbers>

#include "pwlab/parallel.hpp"

namespace pwlab {

namespace {
constexpr double kPi = std::numbers::pi;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

double wrap_pi(double a) {
  a = std::fmod(a + kPi, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  return a - kPi;
}
}  // namespace

BlowupCoords blowup_coords(const TraceCoords& tc) {
  if (tc.Z.is_zero()) throw ArgumentError("blowup_coords: Z = 0");
  BlowupCoords bc;
  if (tc.Y.log_abs() <= tc.X.log_abs()) {
    bc.chart = BlowupCoords::Chart::near_p1;
    bc.c1 = tc.X / tc.Z;
    bc.c2 = tc.Y / tc.X;
  } else {
    bc.chart = BlowupCoords::Chart::near_p2;
    bc.c1 = tc.Y / tc.Z;
    bc.c2 = tc.X / tc.Y;
  }
  return bc;
}

NervePoint simpson_map(const TraceCoords& tc, const SimpsonThresholds& thr) {
  double lx = tc.X.log_abs(), ly = tc.Y.log_abs(), lz = tc.Z.log_abs();
  double log_m = std::max(lx, ly) - lz;
  double lambda = clamp01((log_m - std::log(thr.m_lo)) / (std::log(thr.m_hi) - std::log(thr.m_lo)));
  // u = |Y| / (|X| + |Y|) without leaving the log scale
  double u = 1.0 / (1.0 + std::exp(lx - ly));
  double w = clamp01((u - thr.u_lo) / (thr.u_hi - thr.u_lo));
  NervePoint p;
  p.p0 = lambda;
  p.p1 = (1.0 - lambda) * (1.0 - w);
  p.p2 = (1.0 - lambda) * w;
  p.valid = p.min_coord() <= 1e-12;
  return p;
}

namespace {

// arclength position on the triangle boundary, s in [0,3):
// [0,1): edge V0->V1 (p2 = 0), [1,2): V1->V2 (p0 = 0), [2,3): V2->V0 (p1 = 0)
double boundary_position(const NervePoint& p) {
  if (p.p2 <= p.p0 && p.p2 <= p.p1) return p.p1 >= 1.0 ? 1.0 : p.p1;
  if (p.p0 <= p.p1 && p.p0 <= p.p2) return 1.0 + (p.p2 >= 1.0 ? 1.0 : p.p2);
  return 2.0 + (p.p0 >= 1.0 ? 1.0 : p.p0);
}

}  // namespace

int winding_number(const std::vector<NervePoint>& loop) {
  if (loop.size() < 3) throw ArgumentError("winding_number: need at least 3 samples");
  for (const auto& p : loop)
    if (!p.valid) throw ArgumentError("winding_number: invalid sample in loop");
  double total = 0.0;
  double prev = boundary_position(loop.front());
  for (size_t k = 1; k <= loop.size(); ++k) {
    double s = boundary_position(loop[k % loop.size()]);
    double d = s - prev;
    d = std::fmod(d + 1.5, 3.0);
    if (d < 0.0) d += 3.0;
    d -= 1.5;
    if (std::abs(d) >= 1.0)
      throw ResolutionError("winding_number: consecutive samples jump a third of the circle");
    total += d;
    prev = s;
  }
  double w = total / 3.0;
  long rounded = std::lround(w);
  if (std::abs(w - double(rounded)) > 1e-6)
    throw ResolutionError("winding_number: loop does not close up");
  return int(rounded);
}

namespace {

struct RatioSpec {
  const char* name;
  Coord num, den;
};

double holonomy_phase(const UIntegrals& u, int a_mult, int b_mult) {
  auto ed = u.eta_diff();
  auto gd = u.gamma_diff();
  double hol_a = (ed[0] - ed[1]) + gd[0];
  double hol_b = (ed[1] - ed[2]) + gd[1];
  return a_mult * hol_a + b_mult * hol_b;
}

const ScaledComplex& coord_value(const TraceCoords& tc, Coord c) {
  switch (c) {
    case Coord::X: return tc.X;
    case Coord::Y: return tc.Y;
    default: return tc.Z;
  }
}

const std::array<TraceTerm, 3>& coord_terms(const TraceCoords& tc, Coord c) {
  switch (c) {
    case Coord::X: return tc.x_terms;
    case Coord::Y: return tc.y_terms;
    default: return tc.z_terms;
  }
}

double subleading_over_leading(const TraceCoords& tc, Coord c) {
  const auto& t = coord_terms(tc, c);
  std::array<double, 3> e = {t[0].real_exp, t[1].real_exp, t[2].real_exp};
  std::sort(e.begin(), e.end(), std::greater<double>());
  return std::exp(e[1] - e[0]) + std::exp(e[2] - e[0]);
}

}  // namespace

HolonomyCheckReport holonomy_phase_check(int sector, const UIntegrals& u,
                                         const PolarParam& param, const Periods& periods) {
  if (sector < 2 || sector > 5)
    throw ArgumentError("holonomy_phase_check: sector must be in S2..S5");
  struct Designation {
    RatioSpec ratio;
    const char* cycle;
    int a_mult, b_mult;
  };
  std::vector<Designation> plan;
  switch (sector) {
    case 2:
      plan = {{{"Y/X", Coord::Y, Coord::X}, "B", 0, 1},
              {{"Y/Z", Coord::Y, Coord::Z}, "2B", 0, 2}};
      break;
    case 3:
      plan = {{{"Y/X", Coord::Y, Coord::X}, "-A-B", -1, -1},
              {{"Y/Z", Coord::Y, Coord::Z}, "2B", 0, 2}};
      break;
    case 4:
      plan = {{{"X/Z", Coord::X, Coord::Z}, "A", 1, 0},
              {{"X/Y", Coord::X, Coord::Y}, "A+B", 1, 1}};
      break;
    default:
      plan = {{{"X/Z", Coord::X, Coord::Z}, "A", 1, 0},
              {{"X/Y", Coord::X, Coord::Y}, "-A", -1, 0}};
      break;
  }

  TraceCoords tc = trace_coords_closed_form(param, periods, u);
  HolonomyCheckReport rep;
  rep.sector = sector;
  rep.phi = param.phi;
  rep.pass = true;
  for (const auto& d : plan) {
    HolonomyCheckRow row;
    row.ratio = d.ratio.name;
    row.cycle = d.cycle;
    row.ratio_phase =
        coord_value(tc, d.ratio.num).arg() - coord_value(tc, d.ratio.den).arg();
    row.holonomy_phase = holonomy_phase(u, d.a_mult, d.b_mult);
    row.discrepancy = std::abs(wrap_pi(row.ratio_phase - row.holonomy_phase));
    double rho = subleading_over_leading(tc, d.ratio.num) +
                 subleading_over_leading(tc, d.ratio.den);
    row.subleading_ratio = rho;
    // phase perturbation from sub-leading contamination, with a float-noise
    // floor for the regime where rho underflows machine precision
    double bound = std::max(2.0 * rho / std::max(1.0 - 2.0 * rho, 0.5), 1e-12);
    row.pass = row.discrepancy <= bound;
    rep.pass = rep.pass && row.pass;
    rep.rows.push_back(row);
  }
  return rep;
}

PWReport pw_verify(double cbrt_R, const UIntegrals& u, int n_samples,
                   const SimpsonThresholds& thr, const Periods* periods,
                   bool keep_diagnostics) {
  if (n_samples < 360)
    throw ResolutionError("pw_verify: need at least 360 samples per turn");
  Periods p = periods ? *periods : compute_periods();
  PWReport rep;
  rep.samples = n_samples;

  std::vector<PWSample> samples(n_samples);
  parallel_for(n_samples, [&](int k) {
    double phi = 2.0 * kPi * k / n_samples;
    PolarParam prm(cbrt_R, phi);
    TraceCoords tc = trace_coords_closed_form(prm, p, u);
    PWSample s;
    s.phi = phi;
    SectorOrRay sr = sector_of(x_coordinate(p, phi), 1e-9);
    s.sector = sr.on_ray ? 0 : sr.j;
    s.nerve = simpson_map(tc, thr);
    samples[k] = s;
  });

  rep.all_valid = true;
  for (const auto& s : samples)
    if (!s.nerve.valid) {
      rep.all_valid = false;
      rep.invalid_phis.push_back(s.phi);
    }
  if (rep.all_valid) {
    std::vector<NervePoint> loop;
    loop.reserve(samples.size());
    for (const auto& s : samples) loop.push_back(s.nerve);
    rep.winding = winding_number(loop);
    rep.pass = std::abs(rep.winding) == 1;
  }
  if (keep_diagnostics) rep.diagnostics = std::move(samples);
  return rep;
}

}  // namespace pwlab
