#pragma once

// Seeded generator for property tests. The state update and output mix are
// the splitmix64 constants, so that other implementations can replay cases.

#include <cstdint>

namespace kmcat {

class SplitMix64 {
 public:
  static constexpr std::uint64_t kDefaultSeed = 20240601;

  explicit SplitMix64(std::uint64_t seed = kDefaultSeed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi] (modulo reduction).
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(next() % span);
  }

  bool coin() { return next() & 1U; }

 private:
  std::uint64_t state_;
};

}  // namespace kmcat
