#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qseries {

/// Seeded generator whose output is identical on every platform: the engine
/// is mt19937_64 and doubles are built from its top 53 bits.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

/// Stable 64-bit FNV-1a hash, used to derive per-case seeds.
std::uint64_t stable_hash(std::string_view text, std::uint64_t seed = 0xcbf29ce484222325ULL);

/// Combines a seed with a label into a new seed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

}  // namespace qseries
