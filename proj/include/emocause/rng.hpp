#pragma once

#include <cstdint>
#include <random>

namespace emocause {

// Seeded generator used everywhere randomness is needed. Doubles are mapped
// from raw mt19937_64 output rather than through <random> distributions,
// whose rounding is implementation-defined; this keeps runs reproducible
// bit-for-bit for a given seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1), 53 random bits.
  double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform index in [0, n). n must be > 0.
  size_t next_index(size_t n) {
    size_t i = static_cast<size_t>(next_double() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  uint64_t next_u64() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace emocause
