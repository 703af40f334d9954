#pragma once

#include <cstdint>

namespace xorkneser {

// SplitMix64: 64-bit state, identical streams on every platform. Used
// instead of <random> engines+distributions, whose outputs are not
// portable across standard library implementations.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Independent child stream.
  SplitMix64 split() { return SplitMix64(next()); }

  // Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound; // 2^64 mod bound
    while (true) {
      const std::uint64_t r = next();
      if (r >= limit)
        return r % bound;
    }
  }

private:
  std::uint64_t state_;
};

} // namespace xorkneser
