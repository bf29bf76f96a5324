#pragma once

#include <cstdint>

namespace aisr {

// splitmix64 (Steele/Lea/Flood). Chosen because its output sequence is
// fixed by the seed alone, independent of platform and standard library,
// so sampled identities and random verdicts reproduce everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    // Seed for the index-th substream of a run. Each sample / sampled
    // identity draws from its own substream, so results do not depend
    // on how the index space is partitioned across workers.
    static std::uint64_t substream(std::uint64_t seed, std::uint64_t index) noexcept {
        SplitMix64 g(seed);
        return g.next() ^ (index * 0xD1342543DE82EF95ULL);
    }

private:
    std::uint64_t state_;
};

}  // namespace aisr
