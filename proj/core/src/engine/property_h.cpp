#include <algorithm>
#include <cmath>
#include <numbers>

#include "qseries/engine.hpp"
#include "qseries/error.hpp"
#include "qseries/rng.hpp"

namespace qseries::engine {

namespace {

constexpr long kMaxComponent = 6;

double deviation(TermFn& scaled, TermFn& plain, const QComplex& H, IndexView k) {
  const QComplex expected = ipow(H, weight(k)) * plain(k);
  return relative_error(scaled(k), expected);
}

}  // namespace

PropertyHResult check_property_H(const QBinomialBlock& block, int trials, std::uint64_t seed, double tol) {
  if (trials < 1) throw Error(Errc::invalid_parameters, "property H check needs at least one trial");
  const Identity id = block_identity(block);
  Rng rng(derive_seed(seed, "property-H|" + block.name));
  PropertyHResult result;
  result.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    Dims dims;
    for (const auto& name : block.dim_names) dims[name] = 1 + trial % 2;
    const Sample sample = sample_domain(id, dims, derive_seed(seed, std::to_string(trial)), 1).front();
    const BlockParams view(sample.params, "");
    const QComplex& q = sample.bases.q();
    const QComplex& z = sample.params.scalar("z");
    const double modulus = rng.uniform(0.5, 1.5);
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const QComplex H(modulus * std::cos(angle), modulus * std::sin(angle));

    auto check = [&](const BlockTermFactory& factory, int dimension) {
      TermFn plain = factory(view, q, z);
      TermFn scaled = factory(view, q, z * H);
      std::vector<long> k(static_cast<std::size_t>(dimension));
      for (auto& kr : k) kr = rng.integer(0, kMaxComponent);
      result.max_deviation = std::max(result.max_deviation, deviation(scaled, plain, H, k));
    };
    check(block.summand, block.dimension(dims));
    if (block.is_transformation()) check(block.rest, block.rest_dimension(dims));
  }
  result.pass = result.max_deviation <= tol;
  return result;
}

QComplex q_function(const std::function<QComplex(const QComplex&)>& product, const QComplex& z, const QComplex& step,
                    long k) {
  return checked_div(product(z * ipow(step, k)), product(z));
}

}  // namespace qseries::engine
