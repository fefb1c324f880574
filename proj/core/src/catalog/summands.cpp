#include <algorithm>

#include "catalog/detail.hpp"

namespace qseries::catalog_detail {

QComplex special_vandermonde(IndexView k, long n, const QComplex& base) {
  QComplex result(1L);
  const long len = static_cast<long>(k.size());
  for (long r = 0; r < len; ++r) {
    for (long s = r + 1; s < len; ++s) {
      result *= (one() - ipow(base, n * (k[r] - k[s]) + r - s)) / (one() - ipow(base, r - s));
    }
  }
  return result;
}

MilneLillyTerm::MilneLillyTerm(Vec x, const Vec& a, QComplex base) : x_(std::move(x)), base_(std::move(base)) {
  const std::size_t n = x_.size();
  if (a.size() != n) throw Error(Errc::length_mismatch, "a and x differ in length");
  ratios_.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      QComplex xr_xs = x_[r] / x_[s];
      ratios_.emplace_back(a[s] * xr_xs, base_ * xr_xs, base_);
    }
    inverse_x_.emplace_back(one() / x_[r]);
  }
}

QComplex MilneLillyTerm::operator()(IndexView k) {
  const std::size_t n = x_.size();
  QComplex t = type_a_vandermonde(x_, k, base_);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) t *= ratios_[r * n + s](k[r]);
    t *= inverse_x_[r](k[r]);
  }
  return t * ipow(base_, power_exponent(k) + e2(k));
}

GustafsonKrattenthalerTerm::GustafsonKrattenthalerTerm(Vec x, const QComplex& a, QComplex base)
    : x_(std::move(x)), base_(std::move(base)), ratio_(a, base_, base_) {}

QComplex GustafsonKrattenthalerTerm::operator()(IndexView k) {
  QComplex t = type_a_vandermonde(x_, k, base_);
  for (long kr : k) t *= ratio_(kr);
  return t * ipow(base_, power_exponent(k));
}

ExtraParameterTerm::ExtraParameterTerm(Vec x, const Vec& a, const QComplex& c, QComplex base)
    : x_(std::move(x)), base_(std::move(base)) {
  const std::size_t n = x_.size();
  if (a.size() != n) throw Error(Errc::length_mismatch, "a and x differ in length");
  const QComplex prod_a = product(a);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      QComplex xr_xs = x_[r] / x_[s];
      ratios_.emplace_back(a[s] * xr_xs, base_ * xr_xs, base_);
    }
    QComplex cx = c * x_[r];
    single_.emplace_back(cx / prod_a, cx, base_);
    total_.emplace_back(cx, cx / a[r], base_);
  }
}

QComplex ExtraParameterTerm::operator()(IndexView k) {
  const std::size_t n = x_.size();
  const long total = weight(k);
  QComplex t = type_a_vandermonde(x_, k, base_);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) t *= ratios_[r * n + s](k[r]);
    t *= single_[r](k[r]);
    t *= total_[r](total);
  }
  return t * ipow(base_, power_exponent(k));
}

KajiharaLeftTerm::KajiharaLeftTerm(Vec x, const Vec& y, const Vec& a, const Vec& b, const QComplex& c, QComplex base)
    : x_(std::move(x)), base_(std::move(base)), m_(y.size()) {
  const std::size_t n = x_.size();
  if (a.size() != n || b.size() != m_) throw Error(Errc::length_mismatch, "Kajihara parameter lengths");
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      QComplex xr_xs = x_[r] / x_[s];
      ratios_.emplace_back(a[s] * xr_xs, base_ * xr_xs, base_);
    }
    for (std::size_t s = 0; s < m_; ++s) {
      QComplex xy = x_[r] * y[s];
      mixed_.emplace_back(b[s] * xy, c * xy, base_);
    }
  }
}

QComplex KajiharaLeftTerm::operator()(IndexView k) {
  const std::size_t n = x_.size();
  QComplex t = type_a_vandermonde(x_, k, base_);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) t *= ratios_[r * n + s](k[r]);
    for (std::size_t s = 0; s < m_; ++s) t *= mixed_[r * m_ + s](k[r]);
  }
  return t * ipow(base_, power_exponent(k));
}

KajiharaRightTerm::KajiharaRightTerm(const Vec& x, Vec y, const Vec& a, const Vec& b, const QComplex& c, QComplex base)
    : y_(std::move(y)), base_(std::move(base)), n_(x.size()) {
  const std::size_t m = y_.size();
  if (a.size() != n_ || b.size() != m) throw Error(Errc::length_mismatch, "Kajihara parameter lengths");
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) {
      QComplex yr_ys = y_[r] / y_[s];
      ratios_.emplace_back(c * yr_ys / b[s], base_ * yr_ys, base_);
    }
    for (std::size_t s = 0; s < n_; ++s) {
      QComplex cxy = c * x[s] * y_[r];
      mixed_.emplace_back(cxy / a[s], cxy, base_);
    }
  }
}

QComplex KajiharaRightTerm::operator()(IndexView j) {
  const std::size_t m = y_.size();
  QComplex t = type_a_vandermonde(y_, j, base_);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) t *= ratios_[r * m + s](j[r]);
    for (std::size_t s = 0; s < n_; ++s) t *= mixed_[r * n_ + s](j[r]);
  }
  return t * ipow(base_, power_exponent(j));
}

SeriesSide series_side(int dimension, std::function<QComplex(const ParameterSet&, const BaseSystem&)> prefactor,
                       std::function<TermFn(const ParameterSet&, const BaseSystem&)> term) {
  SeriesSide side;
  side.dimension = dimension;
  side.prefactor = std::move(prefactor);
  side.term = std::move(term);
  return side;
}

SeriesSide product_side(std::function<QComplex(const ParameterSet&, const BaseSystem&)> value) {
  SeriesSide side;
  side.dimension = 0;
  side.prefactor = std::move(value);
  return side;
}

QComplex unit(const ParameterSet&, const BaseSystem&) { return QComplex(1L); }

Constraint z_over_x(const char* z, const char* x) {
  return {std::string("max_r |") + z + "/" + x + "_r|",
          [z = std::string(z), x = std::string(x)](const ParameterSet& P, const BaseSystem&) {
            return max_ratio(P.scalar(z), P.vec(x));
          }};
}

Constraint modulus_of(const char* name) {
  return {std::string("|") + name + "|",
          [n = std::string(name)](const ParameterSet& P, const BaseSystem&) { return mod(P.scalar(n)); }};
}

QComplex inf_ratio(const QComplex& num, const QComplex& den, const QComplex& base) {
  return checked_div(qpoch_infinite(num, base), qpoch_infinite(den, base));
}

QComplex product_ratio(const Vec& num, const Vec& den, const QComplex& base) {
  QComplex p(1L);
  for (std::size_t r = 0; r < num.size(); ++r) p *= inf_ratio(num[r], den[r], base);
  return p;
}

Vec divided(const QComplex& num, const Vec& v) {
  Vec out;
  for (const auto& x : v) out.push_back(num / x);
  return out;
}

Vec times(const Vec& a, const Vec& b) {
  Vec out;
  for (std::size_t r = 0; r < a.size(); ++r) out.push_back(a[r] * b[r]);
  return out;
}

double mod(const QComplex& z) { return z.magnitude(); }

double max_ratio(const QComplex& num, const Vec& v) {
  double worst = 0.0;
  for (const auto& x : v) worst = std::max(worst, (num / x).magnitude());
  return worst;
}

std::vector<std::vector<long>> split(IndexView k, const std::vector<int>& sizes) {
  std::vector<std::vector<long>> out;
  std::size_t at = 0;
  for (int s : sizes) {
    out.emplace_back(k.begin() + static_cast<std::ptrdiff_t>(at), k.begin() + static_cast<std::ptrdiff_t>(at + s));
    at += static_cast<std::size_t>(s);
  }
  return out;
}

}  // namespace qseries::catalog_detail
