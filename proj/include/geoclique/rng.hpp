#pragma once

#include <cstdint>

namespace geoclique {

// Small deterministic generator (splitmix64). Used instead of <random>
// distributions so that seeded runs produce identical bytes everywhere.
struct SplitMix {
    std::uint64_t state;

    explicit SplitMix(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0. Rejection-free modulo is fine here:
    // the slight bias is irrelevant for test-instance generation and the
    // output is fully determined by the seed.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    std::int64_t range(std::int64_t lo, std::int64_t hi) { // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1u) != 0; }

    // Derive an independent stream, e.g. one per parallel trial.
    static SplitMix stream(std::uint64_t seed, std::uint64_t index) {
        SplitMix s(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
        s.next();
        return s;
    }
};

} // namespace geoclique
