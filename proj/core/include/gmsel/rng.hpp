#pragma once

#include <cstdint>

namespace gmsel {

/// Deterministic 64-bit generator (splitmix64). Used instead of the standard
/// distributions so that sampled sequences are identical across standard
/// library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [0, n).
  uint64_t next_below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  /// Derive an independent stream for a sub-task.
  static uint64_t derive(uint64_t seed, uint64_t stream) {
    Rng r(seed ^ (0xa5a5a5a55a5a5a5aull + stream * 0x9e3779b97f4a7c15ull));
    return r.next_u64();
  }

 private:
  uint64_t state_;
};

}  // namespace gmsel
