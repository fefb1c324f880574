#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "qseries/multi_index.hpp"
#include "qseries/qcomplex.hpp"
#include "qseries/rng.hpp"

namespace qseries::testing {

/// Complex number with modulus uniform in [lo, hi] and a uniform angle.
inline QComplex random_complex(Rng& rng, double lo, double hi) {
  const double r = rng.uniform(lo, hi);
  const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return QComplex(r * std::cos(theta), r * std::sin(theta));
}

/// A base inside the unit disk, bounded away from 0 and 1.
inline QComplex random_base(Rng& rng) { return random_complex(rng, 0.1, 0.7); }

inline MultiIndex random_index(Rng& rng, int n, long max_component) {
  std::vector<long> k(static_cast<std::size_t>(n));
  for (auto& c : k) c = rng.integer(0, max_component);
  return MultiIndex(std::move(k));
}

/// Pairwise well separated points near the unit circle.
inline std::vector<QComplex> random_variables(Rng& rng, int n) {
  std::vector<QComplex> x;
  while (static_cast<int>(x.size()) < n) {
    QComplex c = random_complex(rng, 0.8, 1.25);
    bool separated = true;
    for (const auto& y : x) separated = separated && abs(c - y).to_double() > 0.3;
    if (separated) x.push_back(c);
  }
  return x;
}

}  // namespace qseries::testing
