#pragma once

#include <cstdint>

namespace matdist {

/// Deterministic 64-bit PRNG (splitmix64). Used for every seeded experiment
/// so that runs are reproducible across platforms and standard libraries.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n) by rejection; free of modulo bias.
    std::uint64_t bounded(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    /// Derives an independent child stream; children of distinct indices are
    /// decorrelated by the splitmix finalizer.
    SplitMix64 split(std::uint64_t index) {
        SplitMix64 fork(state_ ^ (0x9e3779b97f4a7c15ull * (index + 1)));
        fork.next();
        return fork;
    }

  private:
    std::uint64_t state_;
};

}  // namespace matdist
