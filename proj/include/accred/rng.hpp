// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace accred {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic PRNG. mt19937_64 is fully specified by the C++ standard and
// every variate below is derived from raw 64-bit draws only, so a given seed
// produces the same stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // 53-bit uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  int bit() { return static_cast<int>(next_u64() >> 63); }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, k). Multiply-shift; bias is O(k / 2^64).
  uint64_t uniform_int(uint64_t k) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * k) >> 64);
  }

  // Standard normal via Box-Muller on two fresh uniforms.
  double gauss() {
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  // Child stream for the given lane. Decorrelated from the parent and from
  // other lanes regardless of how many draws each consumes.
  static Rng substream(uint64_t seed, uint64_t lane);

 private:
  std::mt19937_64 eng_;
};

// Seed of the lane's child stream; Rng::substream(seed, lane) is exactly
// Rng(substream_seed(seed, lane)).
inline uint64_t substream_seed(uint64_t seed, uint64_t lane) {
  return splitmix64(splitmix64(seed) ^
                    splitmix64(lane + 0x9e3779b97f4a7c15ull));
}

inline Rng Rng::substream(uint64_t seed, uint64_t lane) {
  return Rng(substream_seed(seed, lane));
}

}  // namespace accred
