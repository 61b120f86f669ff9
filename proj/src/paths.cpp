#include "pwlab/paths.hpp"

#include <numbers>

namespace pwlab {

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;
}

PathSpec PathSpec::segment(Complex a, Complex b) {
  PathSpec p;
  p.pieces.push_back(Segment{a, b});
  return p;
}

PathSpec PathSpec::circle(Complex center, double radius, bool positive, double theta_start) {
  if (radius <= 0.0) throw ArgumentError("PathSpec::circle: radius must be positive");
  PathSpec p;
  double dir = positive ? 1.0 : -1.0;
  p.pieces.push_back(Arc{center, radius, theta_start, theta_start + dir * kTau});
  return p;
}

PathSpec PathSpec::concat(const std::vector<PathSpec>& parts, double tol) {
  PathSpec p;
  for (const auto& part : parts) {
    if (!p.pieces.empty() && !part.pieces.empty()) {
      if (std::abs(piece_end(p.pieces.back()) - piece_start(part.pieces.front())) > tol)
        throw ArgumentError("PathSpec::concat: pieces are not endpoint-compatible");
    }
    p.pieces.insert(p.pieces.end(), part.pieces.begin(), part.pieces.end());
  }
  return p;
}

PathSpec PathSpec::eta0(double r) {
  if (!(r > 0.0 && r < 0.25)) throw ArgumentError("eta0: need 0 < r < 1/4");
  return segment(Complex(0.5, 0.0), Complex(r, 0.0));
}

PathSpec PathSpec::eta1(double r) {
  if (!(r > 0.0 && r < 0.25)) throw ArgumentError("eta1: need 0 < r < 1/4");
  return segment(Complex(0.5, 0.0), Complex(1.0 - r, 0.0));
}

PathSpec PathSpec::gamma0(double r) {
  if (!(r > 0.0 && r < 0.25)) throw ArgumentError("gamma0: need 0 < r < 1/4");
  return circle(Complex(0.0, 0.0), r);
}

PathSpec PathSpec::gamma1(double r) {
  if (!(r > 0.0 && r < 0.25)) throw ArgumentError("gamma1: need 0 < r < 1/4");
  return circle(Complex(1.0, 0.0), r, true, std::numbers::pi);
}

PathSpec PathSpec::reversed() const {
  PathSpec p;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    if (std::holds_alternative<Segment>(*it)) {
      const auto& s = std::get<Segment>(*it);
      p.pieces.push_back(Segment{s.b, s.a});
    } else {
      const auto& a = std::get<Arc>(*it);
      p.pieces.push_back(Arc{a.center, a.radius, a.theta1, a.theta0});
    }
  }
  return p;
}

Complex PathSpec::start() const {
  if (pieces.empty()) throw ArgumentError("PathSpec: empty path");
  return piece_start(pieces.front());
}

Complex PathSpec::end() const {
  if (pieces.empty()) throw ArgumentError("PathSpec: empty path");
  return piece_end(pieces.back());
}

double PathSpec::length() const {
  double L = 0.0;
  for (const auto& p : pieces) L += piece_length(p);
  return L;
}

Complex PathSpec::piece_point(const Piece& p, double t) {
  if (std::holds_alternative<Segment>(p)) {
    const auto& s = std::get<Segment>(p);
    return s.a + t * (s.b - s.a);
  }
  const auto& a = std::get<Arc>(p);
  double th = a.theta0 + t * (a.theta1 - a.theta0);
  return a.center + std::polar(a.radius, th);
}

Complex PathSpec::piece_velocity(const Piece& p, double t) {
  if (std::holds_alternative<Segment>(p)) {
    const auto& s = std::get<Segment>(p);
    return s.b - s.a;
  }
  const auto& a = std::get<Arc>(p);
  double dth = a.theta1 - a.theta0;
  double th = a.theta0 + t * dth;
  return Complex(0.0, 1.0) * std::polar(a.radius, th) * dth;
}

double PathSpec::piece_length(const Piece& p) {
  if (std::holds_alternative<Segment>(p)) {
    const auto& s = std::get<Segment>(p);
    return std::abs(s.b - s.a);
  }
  const auto& a = std::get<Arc>(p);
  return a.radius * std::abs(a.theta1 - a.theta0);
}

}  // namespace pwlab
