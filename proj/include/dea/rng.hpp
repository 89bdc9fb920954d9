#pragma once

#include "dea/types.hpp"

#include <cstdint>

namespace dea {

/// xoshiro256** seeded via splitmix64. Self-contained so that generated
/// streams are identical for a given seed regardless of the standard
/// library in use.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& word : state_) {
      // splitmix64 step
      x += 0x9e3779b97f4a7c15ULL;
      uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  uint64_t next() {
    const uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  Real uniform01() { return static_cast<Real>(next() >> 11) * 0x1.0p-53; }

  Real uniform(Real lo, Real hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Marsaglia's polar method.
  Real gaussian() {
    for (;;) {
      const Real u = 2.0 * uniform01() - 1.0;
      const Real v = 2.0 * uniform01() - 1.0;
      const Real s = u * u + v * v;
      if (s > 0.0 && s < 1.0)
        return u * std::sqrt(-2.0 * std::log(s) / s);
    }
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t state_[4];
};

}  // namespace dea
