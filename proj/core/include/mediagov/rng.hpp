#pragma once

#include <cstdint>
#include <random>

namespace mediagov {

/// Seedable 64-bit generator with portable draw helpers.
///
/// The engine is std::mt19937_64, whose output sequence for a given seed is
/// pinned by the standard. The distributions below are implemented here
/// (rather than via std::uniform_*_distribution, whose draw sequences vary
/// across standard libraries) so that runs are bit-reproducible everywhere:
///   - uniform_below(n): rejection sampling on the top of the 64-bit range,
///     then modulo; unbiased.
///   - uniform01(): top 53 bits scaled by 2^-53; values in [0, 1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = eng_();
      if (r >= threshold) return r % n;
    }
  }

  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace mediagov
