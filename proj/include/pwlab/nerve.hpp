#pragma once

#include <vector>

#include "pwlab/sectors.hpp"

namespace pwlab {

/// Affine coordinates near the blown-up node: near P1 the chart is
/// (X/Z, Y/X), near P2 it is (Y/Z, X/Y); the second coordinate has modulus
/// <= 1 by the chart selection.
struct BlowupCoords {
  enum class Chart { near_p1, near_p2 };
  Chart chart;
  ScaledComplex c1, c2;
};

BlowupCoords blowup_coords(const TraceCoords& tc);

/// Point of the 2-simplex produced by the partition-of-unity map; valid when
/// it lies on the boundary (the nerve circle).
struct NervePoint {
  double p0, p1, p2;
  bool valid;
  double min_coord() const { return std::min(p0, std::min(p1, p2)); }
};

struct SimpsonThresholds {
  double m_lo = 1e-4;
  double m_hi = 0.1;
  double u_lo = 0.45;
  double u_hi = 0.55;
};

/// Partition-of-unity map onto the nerve of the cover {N0 (C1 tube),
/// N1 (P1 region), N2 (P2 region)}: with m = max(|X/Z|, |Y/Z|) and
/// u = |Y|/(|X|+|Y|), lambda ramps in log m between m_lo and m_hi, w ramps in
/// u between u_lo and u_hi, and the point is
/// (lambda, (1-lambda)(1-w), (1-lambda) w).
NervePoint simpson_map(const TraceCoords& tc, const SimpsonThresholds& thr = {});

/// Signed winding of a closed loop of valid nerve points around the triangle
/// boundary. Consecutive samples must move less than a third of the
/// circumference.
int winding_number(const std::vector<NervePoint>& loop);

struct HolonomyCheckRow {
  const char* ratio;       // e.g. "Y/X"
  const char* cycle;       // e.g. "B"
  double ratio_phase;      // measured from the full coordinate values
  double holonomy_phase;   // from the u-integrals
  double discrepancy;      // wrapped difference
  double subleading_ratio; // measured sub-dominant/dominant bound
  bool pass;
};

struct HolonomyCheckReport {
  int sector;
  double phi;
  std::vector<HolonomyCheckRow> rows;
  bool pass;
};

/// Sector-midpoint comparison of affine-ratio phases against holonomies of
/// the homology cycles, sectors S2..S5:
///   S2: Y/X ~ hol_B,    Y/Z ~ hol_2B
///   S3: Y/X ~ hol_-A-B, Y/Z ~ hol_2B
///   S4: X/Z ~ hol_A,    X/Y ~ hol_A+B
///   S5: X/Z ~ hol_A,    X/Y ~ hol_-A
/// with hol_A = exp(int_(eta0-eta1)(u1-u2) + int_(gamma0-gamma1) u1) and
/// hol_B the same with (u2-u3; u2).
HolonomyCheckReport holonomy_phase_check(int sector, const UIntegrals& u,
                                         const PolarParam& param, const Periods& periods);

struct PWSample {
  double phi;
  int sector;  // 0 when on a ray
  NervePoint nerve;
};

struct PWReport {
  int winding = 0;
  bool all_valid = false;
  int samples = 0;
  bool pass = false;  // all_valid and |winding| = 1
  std::vector<double> invalid_phis;
  std::vector<PWSample> diagnostics;
};

/// The winding-number certificate: sweep phi over n uniform samples of
/// [0, 2*pi), map the closed-form trace coordinates through the simpson map,
/// require validity pointwise and |winding| = 1. n must be >= 360.
PWReport pw_verify(double cbrt_R, const UIntegrals& u, int n_samples,
                   const SimpsonThresholds& thr = {}, const Periods* periods = nullptr,
                   bool keep_diagnostics = false);

}  // namespace pwlab
