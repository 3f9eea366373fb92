#pragma once

#include <cstdint>

namespace manna {

// SplitMix64 (Steele, Lea & Flood). Fixed constants, identical output on
// every platform; the generator's reproducibility contract depends on it.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-enough draw in [0, bound); plain modulo, documented as part of
  // the output contract.
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

  // Inclusive integer range.
  long long range(long long lo, long long hi) {
    return lo + (long long)below(std::uint64_t(hi - lo + 1));
  }

  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

}  // namespace manna
