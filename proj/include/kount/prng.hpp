#pragma once

// Seedable PRNG with a fully specified sampling procedure.
//
// The engine is std::mt19937_64, whose output sequence is pinned down by the
// C++ standard, and bounded draws use plain rejection sampling, so any golden
// file generated from a seed reproduces bit-for-bit on every platform.

#include <cstdint>
#include <random>

namespace kount {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform draw from {0, ..., n-1}.  Rejects the top partial block of the
  // 64-bit range so every residue is equally likely.
  std::uint64_t uniform(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - rem;
    std::uint64_t x = next();
    while (rem != 0 && x > limit) x = next();
    return x % n;
  }

  // Uniform draw from {lo, ..., hi}, inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace kount
