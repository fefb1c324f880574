#include "qseries/qcore.hpp"

#include <cmath>
#include <string>

#include "qseries/error.hpp"

namespace qseries {

namespace {

constexpr long kMaxProductFactors = 10'000'000;

bool is_exact_integer(const QComplex& z, long& out) {
  if (!z.imag().is_zero() || !mpfr_integer_p(z.real().get())) return false;
  if (!mpfr_fits_slong_p(z.real().get(), MPFR_RNDN)) return false;
  out = mpfr_get_si(z.real().get(), MPFR_RNDN);
  return true;
}

void require_unit_disc(const QComplex& base, const char* name) {
  double m = base.magnitude();
  if (!(m > 0.0 && m < 1.0)) {
    throw Error(Errc::non_convergent_base,
                std::string(name) + " must satisfy 0 < |base| < 1, got |base| = " + std::to_string(m));
  }
}

}  // namespace

QComplex principal_power(const QComplex& base, const QComplex& exponent) {
  long e = 0;
  if (is_exact_integer(exponent, e)) return ipow(base, e);
  return pow(base, exponent);
}

BaseSystem::BaseSystem(QComplex q, QComplex h, QComplex t, std::vector<QComplex> block_h)
    : q_(std::move(q)), h_(std::move(h)), t_(std::move(t)), block_h_(std::move(block_h)) {
  require_unit_disc(q_, "q");
  qh_ = principal_power(q_, h_);
  qt_ = principal_power(q_, t_);
  qht_ = principal_power(q_, h_ * t_);
  require_unit_disc(qh_, "q^h");
  require_unit_disc(qt_, "q^t");
  require_unit_disc(qht_, "q^{ht}");
  block_q_.reserve(block_h_.size());
  block_qt_.reserve(block_h_.size());
  for (const auto& hr : block_h_) {
    block_q_.push_back(principal_power(q_, hr));
    block_qt_.push_back(principal_power(q_, t_ * hr));
    require_unit_disc(block_q_.back(), "q^{h_r}");
    require_unit_disc(block_qt_.back(), "q^{t h_r}");
  }
}

QComplex qpoch_finite(const QComplex& a, const QComplex& base, long k) {
  if (k < 0) throw Error(Errc::invalid_parameters, "qpoch_finite needs k >= 0");
  QComplex result(1L);
  QComplex term = a;
  for (long r = 0; r < k; ++r) {
    result *= QComplex(1L) - term;
    if (r + 1 < k) term *= base;
  }
  return result;
}

QComplex qpoch_infinite(const QComplex& a, const QComplex& base, double tol) {
  double bm = base.magnitude();
  if (!(bm < 1.0)) {
    throw Error(Errc::non_convergent_base, "infinite product needs |base| < 1, got " + std::to_string(bm));
  }
  if (!(tol > 0.0)) throw Error(Errc::invalid_parameters, "tolerance must be positive");
  const double cutoff = tol * (1.0 - bm);
  QComplex result(1L);
  QComplex term = a;
  for (long r = 0; term.magnitude() >= cutoff; ++r) {
    if (r >= kMaxProductFactors) {
      throw Error(Errc::non_convergent_base, "infinite product did not reach its cutoff");
    }
    result *= QComplex(1L) - term;
    if (base.is_zero()) break;
    term *= base;
  }
  return result;
}

QComplex qpoch_scaled(const QComplex& a, const QComplex& base, const QComplex& step_power, long k, double tol) {
  QComplex num = qpoch_infinite(a, base, tol);
  QComplex den = qpoch_infinite(a * ipow(step_power, k), base, tol);
  if (is_negligible(den)) {
    throw Error(Errc::division_by_zero, "denominator product of a scaled q-Pochhammer symbol vanishes");
  }
  return num / den;
}

long e2(IndexView k) noexcept {
  long total = weight(k);
  long result = total * (total - 1) / 2;
  for (long kr : k) result -= kr * (kr - 1) / 2;
  return result;
}

QComplex dot(const std::vector<QComplex>& h, IndexView k) {
  if (h.size() != k.size()) {
    throw Error(Errc::length_mismatch,
                "dot product of lengths " + std::to_string(h.size()) + " and " + std::to_string(k.size()));
  }
  QComplex result(0L);
  for (std::size_t r = 0; r < h.size(); ++r) result += h[r] * QComplex(k[r]);
  return result;
}

bool is_negligible(const QComplex& z) {
  double m = z.magnitude();
  return !(m >= std::ldexp(1.0, static_cast<int>(16 - working_precision())));
}

QComplex checked_div(const QComplex& num, const QComplex& den) {
  if (is_negligible(den)) throw Error(Errc::pole_encountered, "zero denominator");
  return num / den;
}

PochTable::PochTable(QComplex a, QComplex base)
    : a_(std::move(a)), base_(std::move(base)), next_factor_term_(a_), values_{QComplex(1L)} {}

const QComplex& PochTable::operator()(long k) {
  if (k < 0) throw Error(Errc::invalid_parameters, "q-Pochhammer index must be >= 0");
  while (static_cast<long>(values_.size()) <= k) {
    values_.push_back(values_.back() * (QComplex(1L) - next_factor_term_));
    next_factor_term_ *= base_;
  }
  return values_[static_cast<std::size_t>(k)];
}

ScaledPoch::ScaledPoch(QComplex a, QComplex base, QComplex step_power, double tol)
    : a_(std::move(a)), base_(std::move(base)), step_(std::move(step_power)), tol_(tol) {
  full_ = qpoch_infinite(a_, base_, tol_);
}

const QComplex& ScaledPoch::operator()(long k) {
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  QComplex den = qpoch_infinite(a_ * ipow(step_, k), base_, tol_);
  if (is_negligible(den)) {
    throw Error(Errc::division_by_zero, "denominator product of a scaled q-Pochhammer symbol vanishes");
  }
  return cache_.emplace(k, full_ / den).first->second;
}

PowerTable::PowerTable(QComplex base) : values_{QComplex(1L), std::move(base)} {}

const QComplex& PowerTable::operator()(long e) {
  if (e < 0) throw Error(Errc::invalid_parameters, "power table exponent must be >= 0");
  while (static_cast<long>(values_.size()) <= e) values_.push_back(values_.back() * values_[1]);
  return values_[static_cast<std::size_t>(e)];
}

}  // namespace qseries
