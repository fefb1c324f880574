#include <cmath>
#include <numbers>
#include <optional>

#include "qseries/catalog.hpp"
#include "qseries/error.hpp"
#include "qseries/rng.hpp"

namespace qseries {

namespace {

constexpr double kExponentMin = 0.5;
constexpr double kExponentMax = 2.5;
constexpr double kMinVariableDistance = 0.3;

QComplex polar_sample(Rng& rng, double lo, double hi) {
  const double r = rng.uniform(lo, hi);
  const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return QComplex(r * std::cos(theta), r * std::sin(theta));
}

bool well_separated(const std::vector<QComplex>& v) {
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t s = r + 1; s < v.size(); ++s) {
      if ((v[r] - v[s]).magnitude() < kMinVariableDistance) return false;
    }
  }
  return true;
}

std::optional<Sample> candidate(const Identity& identity, const Dims& dims, Rng& rng) {
  const BaseProfile& profile = identity.base;
  QComplex q(rng.uniform(profile.q_min, profile.q_max));
  QComplex h(profile.uses_h ? rng.uniform(kExponentMin, kExponentMax) : 1.0);
  QComplex t(profile.uses_t ? rng.uniform(kExponentMin, kExponentMax) : 1.0);
  std::vector<QComplex> block_h;
  for (int r = 0; r < profile.block_count(dims); ++r) block_h.emplace_back(rng.uniform(kExponentMin, kExponentMax));

  ParameterSet params(dims);
  bool separated = true;
  for (const auto& spec : identity.schema) {
    if (spec.dim.empty()) {
      params.set(spec.name, polar_sample(rng, spec.min_modulus, spec.max_modulus));
      continue;
    }
    std::vector<QComplex> values;
    for (int r = 0; r < dims.at(spec.dim); ++r) values.push_back(polar_sample(rng, spec.min_modulus, spec.max_modulus));
    if (spec.kind == ParamKind::variable) separated = separated && well_separated(values);
    params.set(spec.name, std::move(values));
  }
  if (!separated) return std::nullopt;
  try {
    BaseSystem bases(q, h, t, std::move(block_h));
    if (!identity.in_domain(params, bases, kSamplingMargin)) return std::nullopt;
    return Sample{std::move(params), std::move(bases)};
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<Sample> sample_domain(const Identity& identity, const Dims& dims, std::uint64_t seed, int count) {
  if (count < 1) throw Error(Errc::invalid_parameters, "sample count must be at least 1");
  identity.check_dims(dims);
  Rng rng(derive_seed(seed, identity.id + "|" + dims_to_string(dims)));
  std::vector<Sample> out;
  int rejected = 0;
  while (static_cast<int>(out.size()) < count) {
    if (auto s = candidate(identity, dims, rng)) {
      out.push_back(std::move(*s));
      rejected = 0;
    } else if (++rejected >= kMaxConsecutiveRejections) {
      throw Error(Errc::domain_exhausted, identity.id + ": no admissible point after " +
                                              std::to_string(kMaxConsecutiveRejections) + " attempts");
    }
  }
  return out;
}

}  // namespace qseries
