#include "qseries/qcomplex.hpp"

#include <algorithm>
#include <cmath>

namespace qseries {

QComplex QComplex::parse(std::string_view re, std::string_view im) { return {Real::parse(re), Real::parse(im)}; }

double QComplex::magnitude() const noexcept {
  return std::hypot(re_.to_double(), im_.to_double());
}

QComplex& QComplex::operator+=(const QComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

QComplex& QComplex::operator-=(const QComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

QComplex& QComplex::operator*=(const QComplex& o) {
  // fmma/fmms round once per component, which keeps products deterministic.
  Real re;
  mpfr_fmms(re.get(), re_.get(), o.re_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
  mpfr_fmma(im_.get(), re_.get(), o.im_.get(), im_.get(), o.re_.get(), MPFR_RNDN);
  re_ = std::move(re);
  return *this;
}

QComplex& QComplex::operator/=(const QComplex& o) {
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Real den;
  mpfr_fmma(den.get(), o.re_.get(), o.re_.get(), o.im_.get(), o.im_.get(), MPFR_RNDN);
  Real re;
  mpfr_fmma(re.get(), re_.get(), o.re_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
  mpfr_fmms(im_.get(), im_.get(), o.re_.get(), re_.get(), o.im_.get(), MPFR_RNDN);
  re_ = std::move(re);
  re_ /= den;
  im_ /= den;
  return *this;
}

Real abs(const QComplex& z) { return hypot(z.real(), z.imag()); }

Real norm(const QComplex& z) {
  Real r;
  mpfr_fmma(r.get(), z.real().get(), z.real().get(), z.imag().get(), z.imag().get(), MPFR_RNDN);
  return r;
}

Real arg(const QComplex& z) { return atan2(z.imag(), z.real()); }

QComplex conj(const QComplex& z) { return {z.real(), -z.imag()}; }

QComplex exp(const QComplex& z) {
  Real m = exp(z.real());
  return {m * cos(z.imag()), m * sin(z.imag())};
}

QComplex log(const QComplex& z) { return {log(abs(z)), arg(z)}; }

QComplex pow(const QComplex& base, const QComplex& exponent) {
  if (base.is_zero()) return QComplex(0L);
  return exp(exponent * log(base));
}

QComplex ipow(const QComplex& base, long exponent) {
  QComplex result(1L);
  if (exponent == 0) return result;
  bool invert = exponent < 0;
  unsigned long e = invert ? 0UL - static_cast<unsigned long>(exponent) : static_cast<unsigned long>(exponent);
  QComplex square = base;
  while (e != 0) {
    if (e & 1UL) result *= square;
    e >>= 1;
    if (e != 0) square *= square;
  }
  return invert ? QComplex(1L) / result : result;
}

double relative_error(const QComplex& a, const QComplex& b, double floor) {
  double scale = std::max({a.magnitude(), b.magnitude(), floor});
  return (a - b).magnitude() / scale;
}

std::string to_string(const QComplex& z, int digits) {
  return "(" + z.real().to_string(digits) + ", " + z.imag().to_string(digits) + ")";
}

}  // namespace qseries
