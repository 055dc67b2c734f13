#pragma once

#include <cstdint>
#include <vector>

namespace hnpoly {

// Mixing finalizer used wherever a value must be a pure deterministic
// function of integer inputs (perturbation tables, shard seeds).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform double in [0,1) from the top 53 bits; identical on every platform,
// unlike the distribution adapters in <random>.
inline double u64_to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Deterministic hash of an integer tuple under a seed.
inline std::uint64_t mix_tuple(std::uint64_t seed, const std::vector<long>& v) {
  std::uint64_t h = splitmix64(seed);
  for (long x : v) h = splitmix64(h ^ static_cast<std::uint64_t>(x));
  return h;
}

// Monte-Carlo controls; results are deterministic given (seed, samples).
struct McParams {
  std::uint64_t seed = 0;
  long samples = 100000;
};

}  // namespace hnpoly
