#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hueon {

/// The only random engine used anywhere: 64-bit Mersenne Twister.
///
/// std::mt19937_64 output is fixed by the standard, but the std
/// distributions are not, so the helpers below derive every variate directly
/// from engine output. A (seed, config) pair reproduces bit-identically on
/// any conforming toolchain.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform integer in [lo, hi] by rejection (no modulo bias).
inline std::uint64_t uniform_int(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == UINT64_MAX) return rng();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + x % range;
}

inline bool coin_flip(Rng& rng) { return (rng() >> 63) != 0; }

/// Exponential variate with the given mean (inverse transform).
inline double exponential(Rng& rng, double mean) { return -mean * std::log1p(-uniform01(rng)); }

}  // namespace hueon
