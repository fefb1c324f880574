#include "qseries/multisum.hpp"

#include <cmath>
#include <limits>
#include <set>

#include "qseries/error.hpp"

namespace qseries {

MultiIndex::MultiIndex(std::vector<long> components) : components_(std::move(components)) {
  for (long c : components_) {
    if (c < 0) throw Error(Errc::invalid_parameters, "multi-index components must be non-negative");
  }
  weight_ = qseries::weight(components_);
}

void ParameterSet::set(const std::string& name, QComplex value) {
  vectors_.erase(name);
  scalars_[name] = std::move(value);
}

void ParameterSet::set(const std::string& name, std::vector<QComplex> values) {
  scalars_.erase(name);
  vectors_[name] = std::move(values);
}

const QComplex& ParameterSet::scalar(const std::string& name) const {
  auto it = scalars_.find(name);
  if (it == scalars_.end()) throw Error(Errc::invalid_parameters, "missing scalar parameter '" + name + "'");
  return it->second;
}

const std::vector<QComplex>& ParameterSet::vec(const std::string& name) const {
  auto it = vectors_.find(name);
  if (it == vectors_.end()) throw Error(Errc::invalid_parameters, "missing vector parameter '" + name + "'");
  return it->second;
}

int ParameterSet::dim(const std::string& name) const {
  auto it = dims_.find(name);
  if (it == dims_.end()) throw Error(Errc::invalid_parameters, "missing dimension '" + name + "'");
  return it->second;
}

ParamSpec make_param(std::string name, ParamKind kind, std::string dim) {
  switch (kind) {
    case ParamKind::coefficient: return make_param(std::move(name), kind, std::move(dim), 0.1, 0.5);
    case ParamKind::variable: return make_param(std::move(name), kind, std::move(dim), 0.9, 1.1);
    case ParamKind::argument: return make_param(std::move(name), kind, std::move(dim), 0.02, 0.12);
  }
  return {};
}

ParamSpec make_param(std::string name, ParamKind kind, std::string dim, double min_modulus, double max_modulus) {
  return ParamSpec{std::move(name), kind, std::move(dim), min_modulus, max_modulus};
}

void validate_schema(const std::vector<ParamSpec>& schema, const ParameterSet& params) {
  std::set<std::string> declared;
  for (const auto& spec : schema) {
    declared.insert(spec.name);
    if (spec.dim.empty()) {
      if (!params.has_scalar(spec.name)) {
        throw Error(Errc::invalid_parameters, "missing scalar parameter '" + spec.name + "'");
      }
      continue;
    }
    const auto& v = params.vec(spec.name);
    int len = params.dim(spec.dim);
    if (static_cast<int>(v.size()) != len) {
      throw Error(Errc::invalid_parameters, "parameter '" + spec.name + "' has length " + std::to_string(v.size()) +
                                                ", expected " + spec.dim + " = " + std::to_string(len));
    }
    if (spec.kind == ParamKind::variable) {
      for (std::size_t r = 0; r < v.size(); ++r) {
        for (std::size_t s = r + 1; s < v.size(); ++s) {
          if (is_negligible(v[r] - v[s])) {
            throw Error(Errc::degenerate_variables, "components of '" + spec.name + "' must be pairwise distinct");
          }
        }
      }
    }
  }
  for (const auto& [name, value] : params.scalars()) {
    if (!declared.count(name)) throw Error(Errc::invalid_parameters, "unexpected parameter '" + name + "'");
  }
  for (const auto& [name, value] : params.vectors()) {
    if (!declared.count(name)) throw Error(Errc::invalid_parameters, "unexpected parameter '" + name + "'");
  }
}

namespace {

// Visits the compositions of w into n parts in lexicographic order.
template <typename Fn>
void for_each_composition(int n, long w, Fn&& fn) {
  std::vector<long> k(static_cast<std::size_t>(n), 0);
  if (n == 1) {
    k[0] = w;
    fn(IndexView(k));
    return;
  }
  // Components 0..n-2 range freely; the last takes the remainder.
  long used = 0;
  while (true) {
    k[static_cast<std::size_t>(n - 1)] = w - used;
    fn(IndexView(k));
    int r = n - 2;
    while (r >= 0) {
      if (used < w) {
        ++k[static_cast<std::size_t>(r)];
        ++used;
        break;
      }
      used -= k[static_cast<std::size_t>(r)];
      k[static_cast<std::size_t>(r)] = 0;
      --r;
    }
    if (r < 0) return;
  }
}

void check_distinct(const std::vector<QComplex>& x) {
  for (std::size_t r = 0; r < x.size(); ++r) {
    for (std::size_t s = r + 1; s < x.size(); ++s) {
      if (is_negligible(x[r] - x[s])) {
        throw Error(Errc::degenerate_variables, "Vandermonde variables must be pairwise distinct");
      }
    }
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_shell(int n, long w) {
  if (n < 1 || w < 0) throw Error(Errc::invalid_parameters, "enumerate_shell needs n >= 1 and w >= 0");
  std::vector<MultiIndex> out;
  for_each_composition(n, w, [&](IndexView k) { out.emplace_back(std::vector<long>(k.begin(), k.end())); });
  return out;
}

QComplex vandermonde_factor(const std::vector<QComplex>& x, IndexView k, const QComplex& step_power) {
  if (x.size() != k.size()) throw Error(Errc::length_mismatch, "Vandermonde variables and index differ in length");
  check_distinct(x);
  std::vector<QComplex> shifted;
  shifted.reserve(x.size());
  for (std::size_t r = 0; r < x.size(); ++r) shifted.push_back(x[r] * ipow(step_power, k[r]));
  QComplex result(1L);
  for (std::size_t r = 0; r < x.size(); ++r) {
    for (std::size_t s = r + 1; s < x.size(); ++s) result *= (shifted[r] - shifted[s]) / (x[r] - x[s]);
  }
  return result;
}

QComplex type_a_vandermonde(const std::vector<QComplex>& x, IndexView k, const QComplex& step_power) {
  if (x.size() != k.size()) throw Error(Errc::length_mismatch, "Vandermonde variables and index differ in length");
  check_distinct(x);
  QComplex result(1L);
  const QComplex one(1L);
  for (std::size_t r = 0; r < x.size(); ++r) {
    for (std::size_t s = r + 1; s < x.size(); ++s) {
      QComplex ratio = x[r] / x[s];
      result *= (one - ipow(step_power, k[r] - k[s]) * ratio) / (one - ratio);
    }
  }
  return result;
}

EvalResult evaluate(const SeriesSide& side, const ParameterSet& params, const BaseSystem& bases,
                    const TruncationPolicy& policy) {
  if (side.domain && !side.domain(params, bases)) {
    throw Error(Errc::domain_violation, "parameters lie outside the convergence domain of the series");
  }
  if (policy.max_shell < 0 || policy.min_shells < 0 || !(policy.tail_ratio_tol >= 0.0)) {
    throw Error(Errc::invalid_config, "invalid truncation policy");
  }
  EvalResult out;
  QComplex prefactor = side.prefactor ? side.prefactor(params, bases) : QComplex(1L);
  if (!prefactor.is_finite()) throw Error(Errc::pole_encountered, "prefactor is not finite");
  if (side.dimension == 0) {
    out.value = std::move(prefactor);
    return out;
  }

  TermFn term = side.term(params, bases);
  QComplex sum(0L);
  int small_in_a_row = 0;
  double previous_shell = -1.0;
  double growth = 0.0;
  bool converged = false;
  for (long w = 0; w <= policy.max_shell; ++w) {
    QComplex shell(0L);
    for_each_composition(side.dimension, w, [&](IndexView k) {
      QComplex t = term(k);
      if (!t.is_finite()) throw Error(Errc::pole_encountered, "series term is not finite");
      shell += t;
      ++out.diagnostics.terms;
    });
    sum += shell;
    ++out.diagnostics.shells;

    double shell_mag = shell.magnitude();
    double sum_mag = sum.magnitude();
    double ratio = sum_mag > 0.0 ? shell_mag / sum_mag : (shell_mag > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    out.diagnostics.last_shell_ratio = ratio;
    if (previous_shell > 0.0) growth = shell_mag / previous_shell;
    else if (previous_shell == 0.0) growth = shell_mag > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    previous_shell = shell_mag;

    small_in_a_row = ratio < policy.tail_ratio_tol ? small_in_a_row + 1 : 0;
    if (w + 1 >= policy.min_shells && small_in_a_row >= 2) {
      converged = true;
      break;
    }
  }
  out.diagnostics.converged = converged;

  // Geometric model of the omitted tail, relative to the partial sum, plus one
  // rounding unit for the additions themselves.
  double ratio = out.diagnostics.last_shell_ratio;
  double tail = growth < 1.0 ? ratio * std::max(1.0, growth / (1.0 - growth))
                             : (ratio == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  out.diagnostics.tail_bound = std::max(tail, std::ldexp(1.0, static_cast<int>(4 - working_precision())));

  out.value = prefactor * sum;
  return out;
}

}  // namespace qseries
