// pwlab: numerical verification CLI for the WKB / character-variety toolkit.
//
// Subcommands: periods, sweep, sectors-table, betti-sample, divisor-check,
// wkb-compare, transport-check, pw-verify. Exit codes: 0 pass, 1 fail,
// 2 invalid input.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "pwlab/betti.hpp"
#include "pwlab/nerve.hpp"
#include "pwlab/transport.hpp"

using json = nlohmann::ordered_json;
using namespace pwlab;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kPi = std::numbers::pi;

enum class Status { pass, fail, invalid_input };

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "invalid-input";
  }
}

json scaled_json(const ScaledComplex& v) {
  return json{{"mantissa_re", v.mantissa().real()},
              {"mantissa_im", v.mantissa().imag()},
              {"exponent", v.exponent()}};
}

json complex_json(Complex v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

struct CommonOpts {
  double cbrt_R = 15.0;
  double phi = 0.0;
  int steps = 1440;
  double r = 0.1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  double tol = 1e-12;
  std::string u_csv;
  std::string format = "json";
  std::string out;
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--cbrt-R", o.cbrt_R, "cube-root magnitude |tau| of the base point");
  cmd->add_option("--phi", o.phi, "angle of the base point (radians)");
  cmd->add_option("--steps", o.steps, "number of sweep samples");
  cmd->add_option("--r", o.r, "puncture-disc radius");
  cmd->add_option("--seed", o.seed, "random seed (mt19937_64)")
      ->each([&o](const std::string&) { o.seed_set = true; });
  cmd->add_option("--tol", o.tol, "quadrature tolerance");
  cmd->add_option("--u", o.u_csv,
                  "12 comma-separated imaginary parts: eta0 x3, eta1 x3, gamma0 x3, "
                  "gamma1 x3 (zero-sum triples)");
  cmd->add_option("--format", o.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out, "write output to this file instead of stdout");
  cmd->add_flag("--timing", o.timing, "include wall time in the envelope");
}

UIntegrals parse_u(const CommonOpts& o) {
  if (o.u_csv.empty()) {
    if (o.seed_set) {
      std::mt19937_64 rng(o.seed);
      return UIntegrals::random(rng);
    }
    return UIntegrals::zero();
  }
  std::vector<double> vals;
  std::stringstream ss(o.u_csv);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
  if (vals.size() != 12) throw ArgumentError("--u needs exactly 12 values");
  UIntegrals u;
  for (int i = 0; i < 3; ++i) {
    u.eta0[i] = vals[i];
    u.eta1[i] = vals[3 + i];
    u.gamma0[i] = vals[6 + i];
    u.gamma1[i] = vals[9 + i];
  }
  u.validate();
  return u;
}

json config_json(const CommonOpts& o) {
  json cfg{{"cbrt_R", o.cbrt_R}, {"phi", o.phi},       {"steps", o.steps},
           {"r", o.r},           {"tol", o.tol},       {"format", o.format},
           {"rng", "mt19937_64"}};
  if (o.seed_set) cfg["seed"] = o.seed;
  if (!o.u_csv.empty()) cfg["u"] = o.u_csv;
  return cfg;
}

int emit(const std::string& command, const CommonOpts& o, Status status,
         const json& payload, std::chrono::steady_clock::time_point t0,
         const std::string& csv_body = "") {
  std::string body;
  if (o.format == "csv" && !csv_body.empty()) {
    body = csv_body;
  } else {
    json env{{"tool", "pwlab"},
             {"version", kVersion},
             {"command", command},
             {"config", config_json(o)},
             {"status", status_name(status)},
             {"payload", payload}};
    if (o.timing)
      env["wall_time_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
              .count();
    body = env.dump(2);
    body.push_back('\n');
  }
  if (o.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "pwlab: cannot open output file " << o.out << "\n";
      return 2;
    }
    f << body;
  }
  switch (status) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    default: return 2;
  }
}

// ---- commands -------------------------------------------------------------

int cmd_periods(const CommonOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  if (o.tol <= 0.0) throw ArgumentError("periods: tol must be positive");
  Periods p = compute_periods(o.r, o.tol);
  Periods p2 = compute_periods(o.r * 0.5, o.tol);
  double oracle = 2.0 * std::numbers::sqrt3 *
                  5.299916250856349871941068498945316107715;
  double mag_err = std::abs(std::abs(p.diff) - oracle) / oracle;
  double arg_err = std::abs(std::arg(p.diff) - 5.0 * kPi / 6.0);
  double r_indep = std::abs(p.diff - p2.diff);
  bool ok = mag_err <= 1e-8 && arg_err <= 1e-9 && r_indep <= 1e-9;
  json payload{{"pi0", complex_json(p.pi0)},
               {"pi1", complex_json(p.pi1)},
               {"diff", complex_json(p.diff)},
               {"abs_diff", std::abs(p.diff)},
               {"arg_diff", std::arg(p.diff)},
               {"oracle_abs_diff", oracle},
               {"abs_rel_error", mag_err},
               {"arg_error", arg_err},
               {"r_independence", r_indep}};
  return emit("periods", o, ok ? Status::pass : Status::fail, payload, t0);
}

int cmd_sweep(const CommonOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  if (o.steps < 1) throw ArgumentError("sweep: steps must be >= 1");
  UIntegrals u = parse_u(o);
  Periods p = compute_periods(o.r, o.tol);
  json rows = json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "phi,log_abs_x,arg_x,log_abs_y,arg_y,log_abs_z,arg_z,sector,xdom,ydom,zdom\n";
  bool z_dominates = true;
  for (int k = 0; k < o.steps; ++k) {
    double phi = 2.0 * kPi * k / o.steps;
    PolarParam prm(o.cbrt_R, phi);
    TraceCoords tc = trace_coords_closed_form(prm, p, u);
    SectorOrRay sr = sector_of(x_coordinate(p, phi), 1e-9);
    int xd = 0, yd = 0, zd = 0;
    if (!sr.on_ray) {
      DominanceRecord rec = dominance_empirical(prm, p, u, nullptr);
      xd = rec.x_term;
      yd = rec.y_term;
      zd = rec.z_term;
      z_dominates = z_dominates && tc.Z.log_abs() >= tc.X.log_abs() &&
                    tc.Z.log_abs() >= tc.Y.log_abs();
    }
    int sector = sr.on_ray ? 0 : sr.j;
    csv << phi << "," << tc.X.log_abs() << "," << tc.X.arg() << "," << tc.Y.log_abs()
        << "," << tc.Y.arg() << "," << tc.Z.log_abs() << "," << tc.Z.arg() << ","
        << sector << "," << xd << "," << yd << "," << zd << "\n";
    rows.push_back(json{{"phi", phi},
                        {"log_abs_x", tc.X.log_abs()},
                        {"arg_x", tc.X.arg()},
                        {"log_abs_y", tc.Y.log_abs()},
                        {"arg_y", tc.Y.arg()},
                        {"log_abs_z", tc.Z.log_abs()},
                        {"arg_z", tc.Z.arg()},
                        {"sector", sector},
                        {"dominant_terms", json::array({xd, yd, zd})}});
  }
  json payload{{"rows", rows}, {"z_dominates_off_rays", z_dominates}};
  return emit("sweep", o, z_dominates ? Status::pass : Status::fail, payload, t0,
              csv.str());
}

int cmd_sectors_table(const CommonOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  UIntegrals u = parse_u(o);
  Periods p = compute_periods(o.r, o.tol);
  json rows = json::array();
  int matches = 0;
  for (int j = 1; j <= 12; ++j) {
    PolarParam prm(o.cbrt_R, phi_for_sector_midpoint(j));
    DominanceGaps gaps;
    DominanceRecord rec = dominance_empirical(prm, p, u, &gaps);
    DominanceRecord expect = dominance_expected(SectorId{j});
    bool match = rec.x_term == expect.x_term && rec.y_term == expect.y_term &&
                 rec.z_term == expect.z_term && rec.ordering == expect.ordering;
    matches += match;
    rows.push_back(json{{"sector", j},
                        {"expected", json::array({expect.x_term, expect.y_term,
                                                  expect.z_term})},
                        {"empirical", json::array({rec.x_term, rec.y_term, rec.z_term})},
                        {"ordering", rec.ordering == Ordering::ZXY ? "Z>X>Y" : "Z>Y>X"},
                        {"x_gap", gaps.x_gap},
                        {"top_gap", gaps.top_gap},
                        {"match", match}});
  }
  json payload{{"rows", rows}, {"matches", matches}};
  return emit("sectors-table", o, matches == 12 ? Status::pass : Status::fail, payload,
              t0);
}

int cmd_betti_sample(const CommonOpts& o, int count) {
  auto t0 = std::chrono::steady_clock::now();
  if (count < 1) throw ArgumentError("betti-sample: count must be >= 1");
  EigenvalueData eig = EigenvalueData::special();
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> d(-1.5, 1.5);
  double worst_constraint = 0.0, worst_lawton = 0.0;
  for (int t = 0; t < count; ++t) {
    SurfaceSample s = sample_surface_point(eig, Complex(d(rng), d(rng)),
                                           Complex(d(rng), d(rng)), t % 3);
    worst_constraint = std::max(worst_constraint, s.max_residual);
    auto v = lawton_vector(Matrix3s::from_complex(s.A), Matrix3s::from_complex(s.B));
    worst_lawton = std::max(worst_lawton, lawton_relative_residual(v[6], v[7], v[8]));
  }
  bool ok = worst_constraint <= 1e-9 && worst_lawton <= 1e-8;
  json payload{{"count", count},
               {"max_constraint_residual", worst_constraint},
               {"max_lawton_relative_residual", worst_lawton}};
  return emit("betti-sample", o, ok ? Status::pass : Status::fail, payload, t0);
}

int cmd_divisor_check(const CommonOpts& o, int random_count) {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  json rows = json::array();
  int single_node = 0;
  SingularityReport nodal = singular_points(HomogeneousCubic::nodal_trace_cubic());
  bool nodal_ok = nodal.points.size() == 1 && nodal.points[0].type == SingularityType::node;
  for (int t = 0; t < random_count; ++t) {
    EigenvalueTriple l;
    do {
      l.v = {std::polar(1.0, ang(rng)), std::polar(1.0, ang(rng)),
             std::polar(1.0, ang(rng))};
    } while (std::min({std::abs(l.v[0] - l.v[1]), std::abs(l.v[1] - l.v[2]),
                       std::abs(l.v[0] - l.v[2])}) < 0.1 ||
             std::min({std::abs(l.v[1] * l.v[1] - l.v[0] * l.v[2]),
                       std::abs(l.v[0] * l.v[0] - l.v[1] * l.v[2]),
                       std::abs(l.v[2] * l.v[2] - l.v[0] * l.v[1])}) < 0.05);
    SingularityReport rep = singular_points(divisor_cubic(l));
    bool ok = rep.points.size() == 1 && rep.points[0].type == SingularityType::node;
    single_node += ok;
    json row{{"trial", t}, {"singular_points", rep.points.size()}, {"single_node", ok}};
    if (!rep.points.empty())
      row["gradient_residual"] = rep.points[0].gradient_residual;
    rows.push_back(row);
  }
  bool pass = nodal_ok && single_node == random_count;
  json payload{{"nodal_trace_cubic_ok", nodal_ok},
               {"random_trials", random_count},
               {"single_node_count", single_node},
               {"rows", rows}};
  return emit("divisor-check", o, pass ? Status::pass : Status::fail, payload, t0);
}

int cmd_wkb_compare(const CommonOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  Periods p = compute_periods(o.r, o.tol);
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> dcb(1.0, o.cbrt_R), dphi(0.0, 6.28);
  int cases = std::max(o.steps, 1);
  double wx = 0.0, wy = 0.0, wz = 0.0, wz_zero_u = 0.0;
  for (int t = 0; t < cases; ++t) {
    double phi = dphi(rng);
    if (sector_of(x_coordinate(p, phi), 1e-3).on_ray) {
      --t;
      continue;
    }
    PolarParam prm(dcb(rng), phi);
    UIntegrals u = o.u_csv.empty() && !o.seed_set ? UIntegrals::zero()
                                                  : (o.u_csv.empty()
                                                         ? UIntegrals::random(rng)
                                                         : parse_u(o));
    MonodromyMatrix A = build_monodromy(Puncture::zero, prm, p, u);
    MonodromyMatrix B = build_monodromy(Puncture::one, prm, p, u);
    TraceCoords mt = trace_coords_matrix(A, B);
    TraceCoords cf = trace_coords_closed_form(prm, p, u);
    wx = std::max(wx, relative_diff(mt.X, cf.X));
    wy = std::max(wy, relative_diff(mt.Y, cf.Y));
    wz = std::max(wz, relative_diff(mt.Z, cf.Z));
    TraceCoords mt0 = trace_coords_matrix(build_monodromy(Puncture::zero, prm, p,
                                                          UIntegrals::zero()),
                                          build_monodromy(Puncture::one, prm, p,
                                                          UIntegrals::zero()));
    TraceCoords cf0 = trace_coords_closed_form(prm, p, UIntegrals::zero());
    wz_zero_u = std::max(wz_zero_u, relative_diff(mt0.Z, cf0.Z));
  }
  bool pass = wx <= 1e-12 && wy <= 1e-12 && wz <= 1e-12;
  json payload{{"cases", cases},
               {"max_rel_dev_x", wx},
               {"max_rel_dev_y", wy},
               {"max_rel_dev_z", wz},
               {"max_rel_dev_z_at_zero_u", wz_zero_u},
               {"note",
                "X and Y agree identically for all u; the printed closed form's Z "
                "phases are not realizable by any companion pair (see README), so the "
                "Z column deviates for u != 0 while magnitudes and the u = 0 case "
                "agree to machine precision"}};
  return emit("wkb-compare", o, pass ? Status::pass : Status::fail, payload, t0);
}

int cmd_transport_check(const CommonOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  UIntegrals u = parse_u(o);
  double phi = o.phi != 0.0 ? o.phi : kPi / 2.0;
  ConvergenceReport rep =
      wkb_convergence_check(TransportPath::eta0, phi, {2.0, 3.0, 4.0, 5.0}, u, o.r);
  json rows = json::array();
  for (const auto& row : rep.rows)
    rows.push_back(json{{"cbrt_R", row.cbrt_R},
                        {"beta_per_unit", row.beta_per_unit},
                        {"transport_exponent", row.transport_exponent},
                        {"max_difference", row.max_difference}});
  bool ok = rep.max_difference <= 1e-8;
  json payload{{"phi", phi}, {"rows", rows}, {"max_difference", rep.max_difference}};
  return emit("transport-check", o, ok ? Status::pass : Status::fail, payload, t0);
}

int cmd_pw_verify(const CommonOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  UIntegrals u = parse_u(o);
  Periods p = compute_periods(o.r, o.tol);
  PWReport rep = pw_verify(o.cbrt_R, u, o.steps, {}, &p);
  json payload{{"winding", rep.winding},
               {"all_valid", rep.all_valid},
               {"samples", rep.samples}};
  if (!rep.all_valid) payload["invalid_phis"] = rep.invalid_phis;
  return emit("pw-verify", o, rep.pass ? Status::pass : Status::fail, payload, t0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pwlab: WKB trace-coordinate asymptotics and P=W winding verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CommonOpts o;
  int count = 100;
  int random_count = 20;

  CLI::App* periods = app.add_subcommand("periods", "period integrals and oracles");
  add_common(periods, o);
  CLI::App* sweep = app.add_subcommand("sweep", "trace-coordinate sweep over phi");
  add_common(sweep, o);
  CLI::App* sectors = app.add_subcommand("sectors-table", "dominance table check");
  add_common(sectors, o);
  CLI::App* betti = app.add_subcommand("betti-sample", "Betti surface sampling");
  add_common(betti, o);
  betti->add_option("--count", count, "number of samples");
  CLI::App* divisor = app.add_subcommand("divisor-check", "nodal cubic verification");
  add_common(divisor, o);
  divisor->add_option("--random", random_count, "number of random eigenvalue draws");
  CLI::App* compare = app.add_subcommand("wkb-compare", "matrix vs closed-form routes");
  add_common(compare, o);
  CLI::App* transport = app.add_subcommand("transport-check", "dilation spectra check");
  add_common(transport, o);
  CLI::App* pw = app.add_subcommand("pw-verify", "winding-number P=W certificate");
  add_common(pw, o);

  CLI11_PARSE(app, argc, argv);

  std::string name = "?";
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (periods->parsed()) { name = "periods"; return cmd_periods(o); }
    if (sweep->parsed()) { name = "sweep"; return cmd_sweep(o); }
    if (sectors->parsed()) { name = "sectors-table"; return cmd_sectors_table(o); }
    if (betti->parsed()) { name = "betti-sample"; return cmd_betti_sample(o, count); }
    if (divisor->parsed()) { name = "divisor-check"; return cmd_divisor_check(o, random_count); }
    if (compare->parsed()) { name = "wkb-compare"; return cmd_wkb_compare(o); }
    if (transport->parsed()) { name = "transport-check"; return cmd_transport_check(o); }
    if (pw->parsed()) { name = "pw-verify"; return cmd_pw_verify(o); }
  } catch (const QuadratureError& e) {
    json payload{{"error", e.what()},
                 {"best_estimate", complex_json(e.best_estimate)},
                 {"error_bound", e.error_estimate}};
    return emit(name, o, Status::invalid_input, payload, t0);
  } catch (const std::exception& e) {
    return emit(name, o, Status::invalid_input, json{{"error", e.what()}}, t0);
  }
  return 2;
}
