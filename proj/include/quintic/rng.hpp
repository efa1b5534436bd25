#pragma once

#include <cstdint>

namespace quintic {

// Deterministic splitmix64 stream. All randomness in the library flows from an
// explicit seed through this generator, so results are reproducible across
// platforms and standard library versions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be nonzero.
  uint64_t below(uint64_t n) {
    // rejection sampling to avoid modulo bias
    uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  // Derive an independent stream (for parallel jobs).
  Rng split() { return Rng(next()); }

 private:
  uint64_t state_;
};

}  // namespace quintic
