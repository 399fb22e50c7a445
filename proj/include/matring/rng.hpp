#pragma once

#include <cstdint>

namespace matring {

/// SplitMix64. Chosen over std::mt19937 + distributions because the output
/// stream must be identical across compilers and shard layouts.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t limit = ~0ULL - (~0ULL % bound);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    /// Uniform in [lo, hi] inclusive.
    long long next_in(long long lo, long long hi) {
        return lo + (long long)next_below((std::uint64_t)(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

/// Per-sample RNG derivation: result for a sample depends only on (seed, index),
/// so any sharding of the index range reproduces the same draws.
inline Rng sample_rng(std::uint64_t seed, std::uint64_t index) {
    Rng mixer(seed ^ (0xd1342543de82ef95ULL * (index + 1)));
    std::uint64_t s = mixer.next_u64();
    return Rng(s);
}

}  // namespace matring
