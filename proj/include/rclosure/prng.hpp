#pragma once

#include <cstdint>

namespace rclosure {

// One fixed mixing function (splitmix64) backs every seeded construction in
// the library, so a seed means the same thing on every platform and run.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct SplitMix64 {
    std::uint64_t state = 0;

    constexpr std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough draw in [0, bound); bound must be positive.
    constexpr std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

} // namespace rclosure
