#pragma once

// Building blocks shared by the catalog entries.

#include <deque>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qseries/catalog.hpp"
#include "qseries/error.hpp"

namespace qseries::catalog_detail {

using Vec = std::vector<QComplex>;

inline QComplex one() { return QComplex(1L); }

/// sum_r (r-1) k_r with 1-based r.
inline long power_exponent(IndexView k) {
  long e = 0;
  for (std::size_t r = 0; r < k.size(); ++r) e += static_cast<long>(r) * k[r];
  return e;
}

/// C(v+1, 2)
inline long binom_plus(long v) { return v * (v + 1) / 2; }

/// (-1)^e
inline QComplex sign_power(long e) { return QComplex(e % 2 == 0 ? 1L : -1L); }

inline QComplex product(const Vec& v) {
  QComplex p(1L);
  for (const auto& x : v) p *= x;
  return p;
}

/// Memoized (num; base)_k / (den; base)_k.
class RatioTable {
 public:
  RatioTable(const QComplex& num, const QComplex& den, const QComplex& base) : num_(num, base), den_(den, base) {}
  const QComplex& operator()(long k) {
    while (static_cast<long>(values_.size()) <= k) {
      long j = static_cast<long>(values_.size());
      values_.push_back(checked_div(num_(j), den_(j)));
    }
    return values_[static_cast<std::size_t>(k)];
  }

 private:
  PochTable num_, den_;
  std::deque<QComplex> values_;  // deque: returned references survive growth
};

/// Memoized (num; base)_{ck} / (den; base)_{ck} with step = base^c.
class ScaledRatio {
 public:
  ScaledRatio(const QComplex& num, const QComplex& den, const QComplex& base, const QComplex& step)
      : num_(num, base, step), den_(den, base, step) {}
  QComplex operator()(long k) { return checked_div(num_(k), den_(k)); }

 private:
  ScaledPoch num_, den_;
};

/// Product of several ScaledRatio factors sharing one index, memoized.
class ScaledRatioProduct {
 public:
  void add(const QComplex& num, const QComplex& den, const QComplex& base, const QComplex& step) {
    parts_.emplace_back(num, den, base, step);
  }
  const QComplex& operator()(long k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    QComplex p(1L);
    for (auto& part : parts_) p *= part(k);
    return cache_.emplace(k, std::move(p)).first->second;
  }

 private:
  std::vector<ScaledRatio> parts_;
  std::map<long, QComplex> cache_;
};

/// prod_{r<s} (1 - b^{n(k_r-k_s)+r-s}) / (1 - b^{r-s}): the Vandermonde factor
/// at x_r = b^{r-1} for a series in base b^n.
QComplex special_vandermonde(IndexView k, long n, const QComplex& base);

/// Summand of the A_n q-binomial theorem with parameters a_1..a_n:
/// V(x) prod_{r,s} (a_s x_r/x_s)_{k_r} / (q x_r/x_s)_{k_r} q^{sum (r-1)k_r + e_2(k)} prod x_r^{-k_r},
/// without the argument power z^{|k|}.
class MilneLillyTerm {
 public:
  MilneLillyTerm(Vec x, const Vec& a, QComplex base);
  QComplex operator()(IndexView k);

 private:
  Vec x_;
  QComplex base_;
  std::vector<RatioTable> ratios_;  // row-major n x n
  std::vector<PowerTable> inverse_x_;
};

/// V(x) prod_r (a)_{k_r} / (q)_{k_r} q^{sum (r-1)k_r}, without z^{|k|}.
class GustafsonKrattenthalerTerm {
 public:
  GustafsonKrattenthalerTerm(Vec x, const QComplex& a, QComplex base);
  QComplex operator()(IndexView k);

 private:
  Vec x_;
  QComplex base_;
  RatioTable ratio_;
};

/// Summand with the extra parameter c, without z^{|k|}.
class ExtraParameterTerm {
 public:
  ExtraParameterTerm(Vec x, const Vec& a, const QComplex& c, QComplex base);
  QComplex operator()(IndexView k);

 private:
  Vec x_;
  QComplex base_;
  std::vector<RatioTable> ratios_;
  std::vector<RatioTable> single_;  // (c x_r/A)_{k_r} / (c x_r)_{k_r}
  std::vector<RatioTable> total_;   // (c x_r)_{|k|} / (c x_r/a_r)_{|k|}
};

/// Left summand of the Kajihara transformation, without z^{|k|}.
class KajiharaLeftTerm {
 public:
  KajiharaLeftTerm(Vec x, const Vec& y, const Vec& a, const Vec& b, const QComplex& c, QComplex base);
  QComplex operator()(IndexView k);

 private:
  Vec x_;
  QComplex base_;
  std::size_t m_;
  std::vector<RatioTable> ratios_;  // n x n
  std::vector<RatioTable> mixed_;   // n x m
};

/// Right summand of the Kajihara transformation, without Z^{|j|}.
class KajiharaRightTerm {
 public:
  KajiharaRightTerm(const Vec& x, Vec y, const Vec& a, const Vec& b, const QComplex& c, QComplex base);
  QComplex operator()(IndexView j);

 private:
  Vec y_;
  QComplex base_;
  std::size_t n_;
  std::vector<RatioTable> ratios_;  // m x m
  std::vector<RatioTable> mixed_;   // m x n
};

/// Wraps a stateful functor into a TermFn.
template <typename F>
TermFn share(F f) {
  auto state = std::make_shared<F>(std::move(f));
  return [state](IndexView k) { return (*state)(k); };
}

/// Side with a sum.
SeriesSide series_side(int dimension, std::function<QComplex(const ParameterSet&, const BaseSystem&)> prefactor,
                       std::function<TermFn(const ParameterSet&, const BaseSystem&)> term);

/// Side that is a closed-form product.
SeriesSide product_side(std::function<QComplex(const ParameterSet&, const BaseSystem&)> value);

/// Prefactor 1.
QComplex unit(const ParameterSet&, const BaseSystem&);

/// max_r |z / x_r| for a scalar z and vector x.
Constraint z_over_x(const char* z, const char* x);
/// |name| for a scalar parameter.
Constraint modulus_of(const char* name);

/// prod_r (num_r; base)_inf / (den_r; base)_inf
QComplex product_ratio(const Vec& num, const Vec& den, const QComplex& base);
/// (num; base)_inf / (den; base)_inf
QComplex inf_ratio(const QComplex& num, const QComplex& den, const QComplex& base);
/// {num / v_r}
Vec divided(const QComplex& num, const Vec& v);
/// {a_r b_r}
Vec times(const Vec& a, const Vec& b);

/// max_r |num / v_r| over a vector.
double max_ratio(const QComplex& num, const Vec& v);
double mod(const QComplex& z);

/// Splits k into consecutive pieces of the given sizes.
std::vector<std::vector<long>> split(IndexView k, const std::vector<int>& sizes);

void register_classical(std::vector<Identity>& out);
void register_an_theorems(std::vector<Identity>& out);
void register_ramanujan(std::vector<Identity>& out);
void register_euler(std::vector<Identity>& out);
void register_lauricella(std::vector<Identity>& out);

}  // namespace qseries::catalog_detail
