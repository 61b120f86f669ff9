#pragma once

#include <Eigen/Dense>
#include <array>

#include "pwlab/scaled_complex.hpp"

namespace pwlab {

using Matrix3c = Eigen::Matrix3cd;

/// Dense 3x3 matrix over ScaledComplex. Only the handful of operations the
/// monodromy and transport code needs; everything stays overflow-safe.
struct Matrix3s {
  std::array<ScaledComplex, 9> a{};

  ScaledComplex& operator()(int i, int j) { return a[3 * i + j]; }
  const ScaledComplex& operator()(int i, int j) const { return a[3 * i + j]; }

  static Matrix3s identity() {
    Matrix3s m;
    m(0, 0) = ScaledComplex(1.0);
    m(1, 1) = ScaledComplex(1.0);
    m(2, 2) = ScaledComplex(1.0);
    return m;
  }

  static Matrix3s from_complex(const Matrix3c& c) {
    Matrix3s m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = ScaledComplex(c(i, j));
    return m;
  }

  /// Largest entry exponent; the natural scale to factor out.
  double max_log_abs() const {
    double e = -std::numeric_limits<double>::infinity();
    for (const auto& x : a) e = std::max(e, x.log_abs());
    return e;
  }

  /// Entries divided by e^scale, as a plain complex matrix.
  Matrix3c to_complex_scaled(double scale) const {
    Matrix3c c;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const ScaledComplex& x = (*this)(i, j);
        c(i, j) = x.is_zero() ? Complex(0, 0)
                              : std::polar(std::exp(x.log_abs() - scale), x.arg());
      }
    return c;
  }
};

inline Matrix3s operator*(const Matrix3s& x, const Matrix3s& y) {
  Matrix3s r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ScaledComplex s;
      for (int k = 0; k < 3; ++k) s += x(i, k) * y(k, j);
      r(i, j) = s;
    }
  return r;
}

inline ScaledComplex trace(const Matrix3s& m) { return m(0, 0) + m(1, 1) + m(2, 2); }

inline ScaledComplex det(const Matrix3s& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Adjugate-based inverse; throws ArgumentError on singular input.
inline Matrix3s inverse(const Matrix3s& m) {
  ScaledComplex d = det(m);
  if (d.is_zero()) throw ArgumentError("Matrix3s: singular matrix");
  Matrix3s r;
  r(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  r(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  r(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  r(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  r(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  r(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  r(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  r(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  r(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  ScaledComplex di = d.inverse();
  for (auto& x : r.a) x = x * di;
  return r;
}

}  // namespace pwlab
