#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace routesim {

// Deterministic helpers on top of mt19937_64. The standard distributions are
// avoided on purpose: their output is implementation-defined, these are not.

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent stream `stream` of the generator family keyed by `seed`.
inline std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  for (std::uint64_t i = 0; i < stream; ++i) a = splitmix64(s);
  return std::mt19937_64(a);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n) by masked rejection; n must be positive.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  std::uint64_t mask = ~0ULL >> __builtin_clzll(n - 1);
  for (;;) {
    std::uint64_t v = rng() & mask;
    if (v < n) return v;
  }
}

/// k distinct values from [0, population), ascending.
inline std::vector<std::uint64_t> sample_without_replacement(std::uint64_t population,
                                                             std::uint64_t k,
                                                             std::mt19937_64& rng) {
  std::vector<std::uint64_t> pool(population);
  for (std::uint64_t i = 0; i < population; ++i) pool[i] = i;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t j = i + uniform_below(rng, population - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace routesim
