#pragma once

#include <deque>
#include <map>
#include <vector>

#include "qseries/multi_index.hpp"
#include "qseries/qcomplex.hpp"

namespace qseries {

/// Default truncation tolerance for infinite products.
inline constexpr double kDefaultProductTol = 1e-30;

/// The bases q, q^h, q^t, q^{ht} of an identity, plus optional per-block
/// exponents h_1..h_p with their powers q^{h_r} and q^{t h_r}.
///
/// Every non-integer power is taken once through the principal logarithm;
/// later powers are integer powers of the cached values.
class BaseSystem {
 public:
  /// Throws Error(non_convergent_base) unless every derived base has modulus
  /// strictly between 0 and 1.
  explicit BaseSystem(QComplex q, QComplex h = QComplex(1L), QComplex t = QComplex(1L),
                      std::vector<QComplex> block_h = {});

  const QComplex& q() const noexcept { return q_; }
  const QComplex& h() const noexcept { return h_; }
  const QComplex& t() const noexcept { return t_; }
  const QComplex& qh() const noexcept { return qh_; }
  const QComplex& qt() const noexcept { return qt_; }
  const QComplex& qht() const noexcept { return qht_; }

  std::size_t block_count() const noexcept { return block_h_.size(); }
  const QComplex& block_h(std::size_t r) const { return block_h_.at(r); }
  /// q^{h_r}
  const QComplex& block_base(std::size_t r) const { return block_q_.at(r); }
  /// q^{t h_r}
  const QComplex& block_step(std::size_t r) const { return block_qt_.at(r); }

 private:
  QComplex q_, h_, t_, qh_, qt_, qht_;
  std::vector<QComplex> block_h_, block_q_, block_qt_;
};

/// base^exponent on the principal branch; integer exponents are exact.
QComplex principal_power(const QComplex& base, const QComplex& exponent);

/// (a; base)_k = prod_{r<k} (1 - a base^r).
QComplex qpoch_finite(const QComplex& a, const QComplex& base, long k);

/// (a; base)_inf truncated at the first R with |a base^R| < tol (1 - |base|).
/// The neglected factors change the logarithm of the product by at most
/// about tol, so the relative error is bounded by roughly tol.
QComplex qpoch_infinite(const QComplex& a, const QComplex& base, double tol = kDefaultProductTol);

/// (a; base)_{c k} = (a; base)_inf / (a step_power^k; base)_inf with
/// step_power = base^c.
QComplex qpoch_scaled(const QComplex& a, const QComplex& base, const QComplex& step_power, long k,
                      double tol = kDefaultProductTol);

/// Degree-two elementary symmetric function of the components.
long e2(IndexView k) noexcept;

/// h_1 k_1 + ... + h_p k_p.
QComplex dot(const std::vector<QComplex>& h, IndexView k);

/// num / den, throwing Error(pole_encountered) when den is zero at working
/// precision.
QComplex checked_div(const QComplex& num, const QComplex& den);

/// True when |z| is below the pole threshold 2^{16 - precision}.
bool is_negligible(const QComplex& z);

/// Lazily extended table of (a; base)_k for k = 0, 1, ...
class PochTable {
 public:
  PochTable(QComplex a, QComplex base);
  const QComplex& operator()(long k);

 private:
  QComplex a_, base_, next_factor_term_;
  std::deque<QComplex> values_;  // deque: returned references survive growth
};

/// Memoized (a; base)_{c k} for a fixed step_power = base^c, keyed by k.
class ScaledPoch {
 public:
  ScaledPoch(QComplex a, QComplex base, QComplex step_power, double tol = kDefaultProductTol);
  const QComplex& operator()(long k);

 private:
  QComplex a_, base_, step_, full_;
  double tol_;
  std::map<long, QComplex> cache_;
};

/// Memoized integer powers base^e for e >= 0.
class PowerTable {
 public:
  explicit PowerTable(QComplex base);
  const QComplex& operator()(long e);

 private:
  std::deque<QComplex> values_;  // deque: returned references survive growth
};

}  // namespace qseries
