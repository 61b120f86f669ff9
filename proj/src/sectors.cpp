#include "pwlab/sectors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pwlab {

namespace {
constexpr double kPi = std::numbers::pi;

double wrap_2pi(double a) {
  double w = std::fmod(a, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  return w;
}
}  // namespace

SectorOrRay sector_of(const SectorPoint& x, double ray_tol) {
  if (x.a == 0.0 && x.b == 0.0) throw ArgumentError("sector_of: x = 0");
  double th = wrap_2pi(x.arg());
  double k = th / (kPi / 6.0);
  double nearest = std::round(k);
  if (std::abs(k - nearest) * (kPi / 6.0) <= ray_tol) {
    int ray = int(nearest) % 12;
    if (ray == 0) ray = 12;
    return SectorOrRay{true, ray};
  }
  int j = int(std::floor(k)) + 1;
  j = std::clamp(j, 1, 12);
  return SectorOrRay{false, j};
}

std::vector<double> critical_angles(CriticalKind kind) {
  if (kind == CriticalKind::first) return {0.0, kPi, 2.0 * kPi};
  return {0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0, 2.0 * kPi};
}

namespace {

std::array<double, 3> term_exponents(Coord c, const SectorPoint& x) {
  Complex xv = x.value();
  Complex one_minus_eps = Complex(1.0, 0.0) - cube_root_unity();
  std::array<double, 3> e;
  for (int j = 0; j < 3; ++j) {
    Complex epsj = cube_root_unity_pow(j);
    switch (c) {
      case Coord::X: e[j] = (epsj * xv).real(); break;
      case Coord::Y: e[j] = (-epsj * xv).real(); break;
      case Coord::Z: e[j] = (one_minus_eps * epsj * xv).real(); break;
    }
  }
  return e;
}

}  // namespace

double max_dilation(Coord c, const SectorPoint& x) {
  auto e = term_exponents(c, x);
  return *std::max_element(e.begin(), e.end());
}

DominanceRecord dominance_expected(SectorId s) {
  if (s.j < 1 || s.j > 12) throw ArgumentError("dominance_expected: sector must be 1..12");
  // dominant terms per sector (X, Y, Z), transcribed from the sector table,
  // and the ordering from the sector-by-sector proof
  static constexpr int kX[12] = {1, 1, 3, 3, 3, 3, 2, 2, 2, 2, 1, 1};
  static constexpr int kY[12] = {2, 2, 2, 2, 1, 1, 1, 1, 3, 3, 3, 3};
  static constexpr int kZ[12] = {1, 1, 1, 3, 3, 3, 3, 2, 2, 2, 2, 1};
  static constexpr Ordering kOrd[12] = {
      Ordering::ZXY, Ordering::ZYX, Ordering::ZYX, Ordering::ZXY,
      Ordering::ZXY, Ordering::ZYX, Ordering::ZYX, Ordering::ZXY,
      Ordering::ZXY, Ordering::ZYX, Ordering::ZYX, Ordering::ZXY};
  return DominanceRecord{s, kX[s.j - 1], kY[s.j - 1], kZ[s.j - 1], kOrd[s.j - 1]};
}

DominanceRecord dominance_empirical(const PolarParam& param, const Periods& periods,
                                    const UIntegrals& u, DominanceGaps* gaps) {
  SectorPoint x = x_coordinate(periods, param.phi);
  SectorOrRay sr = sector_of(x);
  if (sr.on_ray)
    throw RayAmbiguityError(
        "dominance_empirical: arg(x) on Stokes ray; use stokes_ray_limits");
  TraceCoords tc = trace_coords_closed_form(param, periods, u);

  auto dominant = [](const std::array<TraceTerm, 3>& t, double* gap) {
    int best = 0;
    for (int j = 1; j < 3; ++j)
      if (t[j].real_exp > t[best].real_exp) best = j;
    if (gap) {
      double second = -std::numeric_limits<double>::infinity();
      for (int j = 0; j < 3; ++j)
        if (j != best) second = std::max(second, t[j].real_exp);
      *gap = second - t[best].real_exp;
    }
    return best + 1;
  };

  DominanceGaps g;
  DominanceRecord rec;
  rec.sector = SectorId{sr.j};
  rec.x_term = dominant(tc.x_terms, &g.x_gap);
  rec.y_term = dominant(tc.y_terms, &g.y_gap);
  rec.z_term = dominant(tc.z_terms, &g.z_gap);
  double lx = tc.X.log_abs(), ly = tc.Y.log_abs(), lz = tc.Z.log_abs();
  rec.ordering = (lx >= ly) ? Ordering::ZXY : Ordering::ZYX;
  g.xy_gap = (rec.ordering == Ordering::ZXY) ? ly - lx : lx - ly;
  g.top_gap = std::max(lx, ly) - lz;
  if (gaps) *gaps = g;
  return rec;
}

double phi_for_sector_midpoint(int j) {
  if (j < 1 || j > 12) throw ArgumentError("phi_for_sector_midpoint: sector must be 1..12");
  double theta = (j - 0.5) * kPi / 6.0;
  double phi = 3.0 * (theta - 5.0 * kPi / 6.0);
  while (phi < 0.0) phi += 6.0 * kPi;
  return phi;
}

double phi_for_ray(int j) {
  if (j < 1 || j > 12) throw ArgumentError("phi_for_ray: ray must be 1..12");
  double theta = j * kPi / 6.0;
  double phi = 3.0 * (theta - 5.0 * kPi / 6.0);
  while (phi < 0.0) phi += 6.0 * kPi;
  return phi;
}

RayLimitReport stokes_ray_limits(int ray, const std::vector<double>& cbrt_grid,
                                 const UIntegrals& u, const Periods& periods) {
  if (ray < 1 || ray > 12 || ray % 2 == 0)
    throw ArgumentError("stokes_ray_limits: ray must be odd (R1, R3, ..., R11)");
  if (cbrt_grid.empty()) throw ArgumentError("stokes_ray_limits: empty grid");
  double phi = phi_for_ray(ray);
  RayLimitReport rep;
  rep.ray = ray;
  for (double cb : cbrt_grid) {
    TraceCoords tc = trace_coords_closed_form(PolarParam(cb, phi), periods, u);
    double lx = tc.X.log_abs(), ly = tc.Y.log_abs(), lz = tc.Z.log_abs();
    rep.rows.push_back(RayLimitRow{cb, std::exp(lx - ly), std::exp(lx - lz),
                                   std::exp(ly - lz)});
  }
  rep.xy_limit = rep.rows.back().xy_ratio;
  rep.xz_limit = rep.rows.back().xz_ratio;
  rep.yz_limit = rep.rows.back().yz_ratio;
  return rep;
}

}  // namespace pwlab
