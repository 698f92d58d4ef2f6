#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace thermoseg {

// Deterministic 64-bit generator (splitmix64). The whole toolkit draws its
// randomness from this one algorithm so that schedules, augmentations and
// fixtures replay bit-identically for a given seed, independent of platform
// or standard-library version. Streams can be split per sample id; a split
// never advances the parent state.
class SplitRng {
 public:
  explicit SplitRng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 mantissa bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Unbiased uniform integer in [0, bound). bound must be nonzero.
  uint64_t next_below(uint64_t bound) {
    const uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Standard normal via Box-Muller; consumes exactly two draws per call.
  double normal() {
    const double u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Child stream keyed by an integer salt; the parent is not advanced.
  SplitRng split(uint64_t salt) const {
    return SplitRng(mix(state_ ^ (0xD1B54A32D192ED03ull + salt * 0x9E3779B97F4A7C15ull)));
  }

  // Child stream keyed by a string (FNV-1a 64 of the key).
  SplitRng split(std::string_view key) const { return split(fnv1a(key)); }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(next_below(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

  static uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001B3ull;
    }
    return h;
  }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

}  // namespace thermoseg
