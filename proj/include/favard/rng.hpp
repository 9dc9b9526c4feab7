#pragma once

#include <cstdint>

namespace favard {

// SplitMix64. Small, fast, and fully specified, so streams are reproducible
// across platforms and independent of the standard library's distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Index-addressable substream: the k-th derived generator is the same no
    // matter which worker asks for it.
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0xA0761D6478BD642FULL + index * 0xE7037ED1A0B428DBULL));
        return Rng(mix.next_u64());
    }

  private:
    std::uint64_t state_;
};

}  // namespace favard
