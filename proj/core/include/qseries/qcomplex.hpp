#pragma once

#include <complex>
#include <string>

#include "qseries/real.hpp"

namespace qseries {

/// Complex number at the thread's working precision.
class QComplex {
 public:
  QComplex() = default;
  QComplex(Real re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  QComplex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  QComplex(double re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  QComplex(double re, double im) : re_(re), im_(im) {}
  QComplex(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  QComplex(int re) : re_(static_cast<long>(re)) {}  // NOLINT(google-explicit-constructor)

  /// Parses decimal strings for the real and imaginary parts.
  static QComplex parse(std::string_view re, std::string_view im = "0");

  const Real& real() const noexcept { return re_; }
  const Real& imag() const noexcept { return im_; }
  Real& real() noexcept { return re_; }
  Real& imag() noexcept { return im_; }

  std::complex<double> to_complex_double() const { return {re_.to_double(), im_.to_double()}; }
  /// |z| rounded to double; used for magnitude tests and truncation rules.
  double magnitude() const noexcept;

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const noexcept { return re_.is_finite() && im_.is_finite(); }

  QComplex& operator+=(const QComplex& o);
  QComplex& operator-=(const QComplex& o);
  QComplex& operator*=(const QComplex& o);
  QComplex& operator/=(const QComplex& o);

  friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
  friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
  friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
  friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
  friend QComplex operator-(const QComplex& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const QComplex& a, const QComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const QComplex& a, const QComplex& b) { return !(a == b); }

 private:
  Real re_;
  Real im_;
};

Real abs(const QComplex& z);
Real norm(const QComplex& z);  // |z|^2
Real arg(const QComplex& z);
QComplex conj(const QComplex& z);
QComplex exp(const QComplex& z);
/// Principal branch, Im log z in (-pi, pi].
QComplex log(const QComplex& z);
/// Principal power base^exponent = exp(exponent * log base).
QComplex pow(const QComplex& base, const QComplex& exponent);
/// Integer power by repeated squaring; negative exponents divide.
QComplex ipow(const QComplex& base, long exponent);

/// Relative distance |a-b| / max(|a|, |b|, floor).
double relative_error(const QComplex& a, const QComplex& b, double floor = 1e-300);

std::string to_string(const QComplex& z, int digits = 40);

}  // namespace qseries
