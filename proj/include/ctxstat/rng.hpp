#pragma once

#include <cstdint>
#include <random>

namespace ctxstat::rng {

// Engine used everywhere; mt19937_64 output is fixed by the standard, so
// everything derived below is reproducible across platforms.
using Engine = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Independent stream seed for sub-task `index` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ull));
}

// Uniform in [0, 1). std::uniform_real_distribution is implementation-defined.
inline double uniform01(Engine& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

// Uniform in (0, 1].
inline double uniform01_open_low(Engine& eng) {
  return static_cast<double>((eng() >> 11) + 1) * 0x1.0p-53;
}

// Unbiased integer in [0, bound). bound must be > 0.
inline std::uint64_t bounded(Engine& eng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = eng();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace ctxstat::rng
