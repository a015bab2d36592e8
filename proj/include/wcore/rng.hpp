#ifndef WCORE_RNG_HPP
#define WCORE_RNG_HPP

#include <cstdint>

namespace wcore {

/// SplitMix64. Hand-rolled so that streams are bit-identical across platforms
/// and standard-library versions; determinism of every seeded run depends on
/// this, so no std::uniform_* anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi], inclusive. Plain modulo: the tiny bias
    /// is irrelevant for instance generation and keeps the stream simple.
    long uniform(long lo, long hi) {
        if (hi < lo) return lo;
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next_u64() % span);
    }

    bool chance(int num, int den) { return uniform(1, den) <= num; }

private:
    std::uint64_t state_;
};

/// Stream for one (seed, counter) cell; disjoint counters give independent
/// deterministic streams, which is what lets suites fan out per instance.
inline Rng rng_for(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t h = seed ^ (0x9e3779b97f4a7c15ULL + (counter << 6) + (counter >> 2));
    h ^= counter * 0xd6e8feb86659fd93ULL;
    return Rng(h);
}

}  // namespace wcore

#endif
