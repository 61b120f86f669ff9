#pragma once

#include <cmath>
#include <variant>
#include <vector>

#include "pwlab/errors.hpp"

namespace pwlab {

/// Contour in the z-plane: straight segments and circle arcs, possibly
/// concatenated. Pieces are parameterized on [0,1] each.
struct PathSpec {
  struct Segment {
    Complex a, b;
  };
  struct Arc {
    Complex center;
    double radius;
    double theta0, theta1;  // oriented; theta1 < theta0 runs clockwise
  };
  using Piece = std::variant<Segment, Arc>;

  std::vector<Piece> pieces;

  static PathSpec segment(Complex a, Complex b);
  /// Full circle starting at angle theta_start; positive = counterclockwise.
  static PathSpec circle(Complex center, double radius, bool positive = true,
                         double theta_start = 0.0);
  static PathSpec concat(const std::vector<PathSpec>& parts, double tol = 1e-12);

  // standard named paths of the three-punctured sphere setup, 0 < r < 1/4
  static PathSpec eta0(double r);    // segment 1/2 -> r
  static PathSpec eta1(double r);    // segment 1/2 -> 1-r
  static PathSpec gamma0(double r);  // positive circle |z| = r from z = r
  static PathSpec gamma1(double r);  // positive circle |z-1| = r from z = 1-r

  PathSpec reversed() const;

  Complex start() const;
  Complex end() const;
  double length() const;

  static Complex piece_point(const Piece& p, double t);
  static Complex piece_velocity(const Piece& p, double t);
  static Complex piece_start(const Piece& p) { return piece_point(p, 0.0); }
  static Complex piece_end(const Piece& p) { return piece_point(p, 1.0); }
  static double piece_length(const Piece& p);
};

/// Continuous lift of arg(z - base) along a path: the data needed to evaluate
/// fractional powers consistently while a contour winds around a branch point.
struct BranchState {
  Complex base{0.0, 0.0};
  double lifted_arg{0.0};
  Complex current{1.0, 0.0};

  static BranchState at(Complex base_point, Complex z0) {
    BranchState s;
    s.base = base_point;
    s.current = z0;
    s.lifted_arg = std::arg(z0 - base_point);
    return s;
  }

  /// Move to z_new, accumulating the principal argument increment. Steps must
  /// subtend less than pi around the base point (quadrature panels guarantee
  /// this). Throws SingularityError when the path touches the base point.
  void advance(Complex z_new) {
    Complex from = current - base;
    Complex to = z_new - base;
    if (std::abs(to) == 0.0 || std::abs(from) == 0.0)
      throw SingularityError("BranchState: path passes through branch point");
    lifted_arg += std::arg(to / from);
    current = z_new;
  }

  /// (current - base)^alpha using the lifted argument.
  Complex lifted_power(double alpha) const {
    double r = std::abs(current - base);
    if (r == 0.0) throw SingularityError("BranchState: power at branch point");
    return std::polar(std::pow(r, alpha), alpha * lifted_arg);
  }
};

}  // namespace pwlab
