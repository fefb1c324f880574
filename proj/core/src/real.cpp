#include "qseries/real.hpp"

#include <cstring>
#include <string>

#include "qseries/error.hpp"

namespace qseries {

namespace {
thread_local long t_precision = kDefaultPrecision;
}  // namespace

long working_precision() noexcept { return t_precision; }

PrecisionScope::PrecisionScope(long bits) : saved_(t_precision) {
  if (bits < kMinPrecision || bits > MPFR_PREC_MAX) {
    throw Error(Errc::invalid_config, "precision must be at least " + std::to_string(kMinPrecision) +
                                          " binary digits, got " + std::to_string(bits));
  }
  t_precision = bits;
}

PrecisionScope::~PrecisionScope() { t_precision = saved_; }

Real::Real() {
  mpfr_init2(value_, t_precision);
  mpfr_set_zero(value_, 1);
}

Real::Real(double v) {
  mpfr_init2(value_, t_precision);
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(long v) {
  mpfr_init2(value_, t_precision);
  mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  std::memcpy(value_, other.value_, sizeof(mpfr_t));
  other.value_->_mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    ensure_init();
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    mpfr_t tmp;
    std::memcpy(tmp, value_, sizeof(mpfr_t));
    std::memcpy(value_, other.value_, sizeof(mpfr_t));
    std::memcpy(other.value_, tmp, sizeof(mpfr_t));
  }
  return *this;
}

Real::~Real() {
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
}

void Real::ensure_init() {
  if (value_->_mpfr_d == nullptr) mpfr_init2(value_, t_precision);
}

Real Real::parse(std::string_view text) {
  Real r;
  std::string buf(text);
  char* end = nullptr;
  if (!buf.empty()) mpfr_strtofr(r.value_, buf.c_str(), &end, 10, MPFR_RNDN);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    throw Error(Errc::invalid_parameters, "not a decimal number: '" + buf + "'");
  }
  return r;
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", digits - 1, value_);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

Real& Real::operator+=(const Real& o) {
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& a) {
  Real r;
  mpfr_neg(r.value_, a.value_, MPFR_RNDN);
  return r;
}

#define QSERIES_UNARY(name, fn)   \
  Real name(const Real& x) {      \
    Real r;                       \
    fn(r.get(), x.get(), MPFR_RNDN); \
    return r;                     \
  }
QSERIES_UNARY(abs, mpfr_abs)
QSERIES_UNARY(sqrt, mpfr_sqrt)
QSERIES_UNARY(exp, mpfr_exp)
QSERIES_UNARY(log, mpfr_log)
QSERIES_UNARY(cos, mpfr_cos)
QSERIES_UNARY(sin, mpfr_sin)
#undef QSERIES_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r;
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

}  // namespace qseries
