#pragma once

#include <optional>
#include <vector>

#include "pwlab/monodromy.hpp"

namespace pwlab {

/// One of the 12 open cones pi(j-1)/6 < arg(x) < pi*j/6, j = 1..12.
struct SectorId {
  int j;
};

/// Either an open sector or the Stokes ray R_j = boundary between S_j, S_j+1.
struct SectorOrRay {
  bool on_ray;
  int j;  // sector index, or ray index when on_ray
};

enum class Coord { X, Y, Z };
enum class Ordering { ZXY, ZYX };  // Z always dominates off the rays

struct DominanceRecord {
  SectorId sector;
  int x_term, y_term, z_term;  // dominant term index per coordinate, 1..3
  Ordering ordering;
};

struct DominanceGaps {
  // sub-dominant minus dominant exponents, negative off the rays
  double x_gap, y_gap, z_gap;
  // log |second coordinate| - log |first coordinate| of the ordering
  double xy_gap, top_gap;
};

SectorOrRay sector_of(const SectorPoint& x, double ray_tol = 1e-12);

enum class CriticalKind { first, second };
std::vector<double> critical_angles(CriticalKind kind);

/// Limiting per-unit-cbrt_R log magnitude of a coordinate at x: the maximum
/// of its three term exponents.
double max_dilation(Coord c, const SectorPoint& x);

/// Hard-coded dominant-term table plus the full magnitude ordering.
DominanceRecord dominance_expected(SectorId j);

/// Dominance measured from the closed-form term breakdown; throws
/// RayAmbiguityError when x sits on a Stokes ray.
DominanceRecord dominance_empirical(const PolarParam& param, const Periods& periods,
                                    const UIntegrals& u, DominanceGaps* gaps = nullptr);

/// phi whose sector coordinate sits in the middle of sector S_j (sectors are
/// addressed by extending phi beyond one turn; x-angle = phi/3 + 5*pi/6).
double phi_for_sector_midpoint(int j);
/// phi landing exactly on the Stokes ray R_j.
double phi_for_ray(int j);

struct RayLimitRow {
  double cbrt_R;
  double xy_ratio, xz_ratio, yz_ratio;  // |X|/|Y| etc.
};

struct RayLimitReport {
  int ray;
  bool formula_level = true;  // conditional on the formulas holding over rays
  std::vector<RayLimitRow> rows;
  double xy_limit, xz_limit, yz_limit;  // values at the largest grid point
};

/// Coordinate-ratio limits along a Stokes ray R_j, j odd (the rays tied to
/// first-kind critical angles: phi = 2k*pi -> R1, R5, R9 and
/// phi = (2k-1)*pi -> R3, R7, R11).
RayLimitReport stokes_ray_limits(int ray, const std::vector<double>& cbrt_grid,
                                 const UIntegrals& u, const Periods& periods);

}  // namespace pwlab
