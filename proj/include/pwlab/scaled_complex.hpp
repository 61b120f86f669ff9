#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "pwlab/errors.hpp"

namespace pwlab {

/// Overflow-safe complex scalar: value = mantissa * e^exponent.
///
/// Nonzero values keep 1 <= |mantissa| < e so that `exponent` is the integer
/// part of the natural-log magnitude and directly comparable with dilation
/// exponents. Zero is mantissa = 0, exponent = 0.
class ScaledComplex {
 public:
  ScaledComplex() : m_(0.0, 0.0), e_(0.0) {}
  ScaledComplex(double v) : m_(v, 0.0), e_(0.0) { normalize(); }
  ScaledComplex(Complex v) : m_(v), e_(0.0) { normalize(); }

  static ScaledComplex zero() { return ScaledComplex(); }

  /// e^(log_mag + i*phase) without overflow.
  static ScaledComplex exp_form(double log_mag, double phase) {
    ScaledComplex s;
    s.m_ = Complex(std::cos(phase), std::sin(phase));
    s.e_ = log_mag;
    s.normalize();
    return s;
  }

  /// exp(w) for complex w with arbitrarily large real part.
  static ScaledComplex exp(Complex w) { return exp_form(w.real(), w.imag()); }

  Complex mantissa() const { return m_; }
  double exponent() const { return e_; }
  bool is_zero() const { return m_ == Complex(0.0, 0.0); }

  /// ln|value|; -inf for zero.
  double log_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return e_ + std::log(std::abs(m_));
  }
  double arg() const { return std::arg(m_); }

  /// Plain complex value; overflows to inf for exponent >~ 709.
  Complex to_complex() const { return m_ * std::exp(e_); }

  ScaledComplex conj() const {
    ScaledComplex s;
    s.m_ = std::conj(m_);
    s.e_ = e_;
    return s;
  }

  ScaledComplex operator-() const {
    ScaledComplex s;
    s.m_ = -m_;
    s.e_ = e_;
    return s;
  }

  ScaledComplex inverse() const {
    if (is_zero()) throw ArgumentError("ScaledComplex: inverse of zero");
    ScaledComplex s;
    s.m_ = 1.0 / m_;
    s.e_ = -e_;
    s.normalize();
    return s;
  }

  friend ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    ScaledComplex s;
    s.m_ = a.m_ * b.m_;
    s.e_ = a.e_ + b.e_;
    s.normalize();
    return s;
  }

  friend ScaledComplex operator/(const ScaledComplex& a, const ScaledComplex& b) {
    return a * b.inverse();
  }

  friend ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const ScaledComplex& hi = (a.e_ >= b.e_) ? a : b;
    const ScaledComplex& lo = (a.e_ >= b.e_) ? b : a;
    double shift = lo.e_ - hi.e_;
    ScaledComplex s;
    // below ~ -745 the low part underflows exactly; that is the correct rounding
    s.m_ = hi.m_ + lo.m_ * std::exp(shift);
    s.e_ = hi.e_;
    s.normalize();
    return s;
  }

  friend ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b) {
    return a + (-b);
  }

  ScaledComplex& operator+=(const ScaledComplex& o) { return *this = *this + o; }
  ScaledComplex& operator*=(const ScaledComplex& o) { return *this = *this * o; }

  friend bool abs_less(const ScaledComplex& a, const ScaledComplex& b) {
    return a.log_abs() < b.log_abs();
  }

 private:
  void normalize() {
    if (m_ == Complex(0.0, 0.0)) {
      e_ = 0.0;
      return;
    }
    double la = std::log(std::abs(m_));
    double k = std::floor(la);
    if (k != 0.0) {
      m_ *= std::exp(-k);
      e_ += k;
    }
    // guard against log/exp rounding right at the bin edge
    double am = std::abs(m_);
    if (am >= std::exp(1.0)) {
      m_ *= std::exp(-1.0);
      e_ += 1.0;
    } else if (am < 1.0) {
      m_ *= std::exp(1.0);
      e_ -= 1.0;
    }
  }

  Complex m_;
  double e_;
};

/// |a - b| / max(|a|, |b|) evaluated on the log scale; 0 for two zeros.
inline double relative_diff(const ScaledComplex& a, const ScaledComplex& b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  ScaledComplex d = a - b;
  double scale = std::max(a.log_abs(), b.log_abs());
  if (d.is_zero()) return 0.0;
  return std::exp(d.log_abs() - scale);
}

}  // namespace pwlab
