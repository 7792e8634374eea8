#pragma once

#include <cstdint>
#include <numbers>

namespace ratekit {

// Counter-based generator: every draw is a pure function of (seed, stream, counter),
// so a trial's randomness does not depend on which worker ran it.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_(mix(seed ^ mix(stream + 0x9E3779B97F4A7C15ULL))) {}

  std::uint64_t next_u64() noexcept { return mix(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % bound;
  }

  double phase() noexcept { return 2.0 * std::numbers::pi * uniform(); }

 private:
  // SplitMix64 finalizer.
  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace ratekit
