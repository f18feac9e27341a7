#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <rclosure/counterexamples.hpp>
#include <rclosure/prng.hpp>

namespace rclosure {

struct SpecialTripleInstance {
    std::vector<Rational> points; // hub plus same-side points, ranks rising toward the hub
    Rational hub;
};

/// Seeded generator for find_special_triple inputs: a hub plus 4..7 points on
/// one side whose ranks strictly increase as they approach the hub (and all
/// exceed the hub's rank). Such a set always admits a special triple.
template <EnumeratedMetricSpace S>
SpecialTripleInstance make_special_triple_instance(const S& space, std::uint64_t seed,
                                                   std::uint64_t index) {
    SplitMix64 rng{splitmix64(seed ^ splitmix64(index + 1))};
    const Rational hub = space.enumerate(1 + static_cast<long long>(rng.below(48)));
    const bool side_below = (rng.next() & 1) != 0;
    const std::size_t count = 4 + static_cast<std::size_t>(rng.below(4));

    std::vector<Rational> points;
    long long last_rank = space.rank(hub);
    long long denom = 2 + static_cast<long long>(rng.below(16));
    while (points.size() < count) {
        const Rational offset(1, denom);
        ++denom; // offsets strictly shrink, so the walk strictly approaches the hub
        const Rational candidate = side_below ? hub - offset : hub + offset;
        const long long r = space.rank(candidate);
        if (r > last_rank) {
            points.push_back(candidate);
            last_rank = r;
        }
    }
    points.push_back(hub);
    return SpecialTripleInstance{std::move(points), hub};
}

/// Seeded generator for refute_two_limits inputs: two clusters of 2..3
/// members each, strictly inside the h/5 windows around l1 and l1 + h.
inline ClusterSpec make_cluster_instance(std::uint64_t seed, std::uint64_t index,
                                         const Rational& h) {
    if (h.sign() <= 0) throw parameter_error("make_cluster_instance: h must be positive");
    SplitMix64 rng{splitmix64(seed ^ splitmix64(index + 0x5eedULL))};
    const RationalLine line;
    const Rational l1 = line.enumerate(1 + static_cast<long long>(rng.below(40)));
    const Rational l2 = l1 + h;

    const auto members = [&](const Rational& center) {
        const std::size_t count = 2 + static_cast<std::size_t>(rng.below(2));
        std::vector<Rational> out;
        for (std::size_t j = 0; j < count; ++j) {
            const Rational offset = h / Rational(5 * static_cast<long long>(j + 2));
            out.push_back((rng.next() & 1) != 0 ? center + offset : center - offset);
        }
        return out;
    };
    return ClusterSpec(l1, l2, members(l1), members(l2));
}

} // namespace rclosure
