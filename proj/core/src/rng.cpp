#include "qseries/rng.hpp"

#include "qseries/error.hpp"

namespace qseries {

long Rng::integer(long lo, long hi) {
  if (hi < lo) throw Error(Errc::invalid_parameters, "empty integer range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw unbiased and platform independent.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v = engine_();
  while (v >= limit) v = engine_();
  return lo + static_cast<long>(v % span);
}

std::uint64_t stable_hash(std::string_view text, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = stable_hash(label);
  h ^= seed + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace qseries
