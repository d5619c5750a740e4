// Small deterministic RNG (splitmix64) so seeded outputs are byte-identical
// across platforms and standard libraries.
#pragma once

#include <cstdint>

namespace negpath {

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0. Multiply-shift bounding (Lemire).
  uint64_t bounded(uint64_t n) {
    const unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
    return static_cast<uint64_t>(m >> 64);
  }

  // Uniform in [lo, hi] inclusive.
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(bounded(static_cast<uint64_t>(hi - lo + 1)));
  }

 private:
  uint64_t state_;
};

}  // namespace negpath
