#pragma once

#include <cstdint>

namespace lieposet {

// Deterministic 64-bit stream (SplitMix64 update/output functions).
//
// std::mt19937 plus std::uniform_int_distribution would be the obvious choice,
// but the distribution's output sequence is implementation-defined, and sampled
// certificates must reproduce byte-for-byte across standard libraries. The
// generator below is fully pinned.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound), bound >= 1, by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (0xffffffffffffffffULL / bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform integer in [-bound, bound].
    long long symmetric(long long bound) {
        const std::uint64_t width = 2 * static_cast<std::uint64_t>(bound) + 1;
        return static_cast<long long>(below(width)) - bound;
    }

private:
    std::uint64_t state_;
};

// Stream for one trial, decorrelated from neighbouring trials. Trials drawn
// from these streams give the same numbers no matter which order (or thread)
// runs them.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 g(seed ^ ((trial + 1) * 0x9e3779b97f4a7c15ULL));
    g.next();
    return g;
}

} // namespace lieposet
