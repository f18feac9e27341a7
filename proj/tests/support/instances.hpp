#pragma once

// Seeded instance generators used by the unit and acceptance suites.

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include <rclosure/rclosure.hpp>

namespace instances {

using namespace rclosure;

// A sequence plus a coloring built to satisfy the monotone property by
// construction: colors are assigned to every (k-1)-subset of term indices
// first (as the color taken together with the limit candidate) and inherited
// by every k-subset of terms whose largest index plays the "later term" role.
struct InheritedInstance {
    MonotoneSequence seq;
    Coloring chi;
    int k;
};

inline InheritedInstance make_inherited_instance(const RationalLine& space, std::uint64_t seed,
                                                 std::uint64_t index) {
    SplitMix64 rng{splitmix64(seed ^ splitmix64(index + 0xABCDULL))};
    const int k = 2 + static_cast<int>(rng.next() & 1);
    constexpr std::size_t term_count = 8;

    std::set<long long> ranks;
    while (ranks.size() < term_count + 1)
        ranks.insert(1 + static_cast<long long>(rng.below(120)));
    std::vector<Rational> terms;
    Rational limit(0);
    std::size_t i = 0;
    for (long long r : ranks) {
        if (i < term_count) terms.push_back(space.enumerate(r));
        else limit = space.enumerate(r);
        ++i;
    }

    auto base = std::make_shared<std::map<std::vector<long long>, int>>();
    detail::for_each_index_subset(static_cast<long long>(term_count), k - 1,
                                  [&](const std::vector<long long>& a) {
                                      (*base)[a] = static_cast<int>(rng.next() & 1);
                                      return true;
                                  });

    auto position = std::make_shared<std::map<Rational, long long>>();
    for (std::size_t t = 0; t < terms.size(); ++t) position->emplace(terms[t], static_cast<long long>(t + 1));

    const Rational limit_copy = limit;
    Coloring chi(k, 2, [base, position, limit_copy](const KSubset& s) {
        bool has_limit = false;
        std::vector<long long> idx;
        for (const Rational& p : s.points()) {
            if (p == limit_copy) { has_limit = true; continue; }
            const auto it = position->find(p);
            if (it == position->end()) return 0; // off the sequence: arbitrary fixed color
            idx.push_back(it->second);
        }
        std::sort(idx.begin(), idx.end());
        if (!has_limit) idx.pop_back(); // drop the largest index: it plays the later-term role
        const auto it = base->find(idx);
        return it == base->end() ? 0 : it->second;
    });

    return InheritedInstance{MonotoneSequence(std::move(terms), std::move(limit)), std::move(chi), k};
}

// Random points + seeded-random coloring + target size, for comparing the
// search against the brute-force oracle.
struct SearchInstance {
    std::vector<Rational> points;
    Coloring chi;
    std::size_t m;
    int k;
    int c;
};

inline SearchInstance make_search_instance(const RationalLine& space, std::uint64_t seed,
                                           std::uint64_t index) {
    SplitMix64 rng{splitmix64(seed ^ splitmix64(index + 0xFACEULL))};
    const int k = 2 + static_cast<int>(rng.next() & 1);
    const int c = 2 + static_cast<int>(rng.below(2));
    const std::size_t count = 8 + static_cast<std::size_t>(rng.below(8)); // 8..15 points
    const std::size_t m = static_cast<std::size_t>(k) + static_cast<std::size_t>(rng.below(3));

    std::set<long long> ranks;
    while (ranks.size() < count) ranks.insert(1 + static_cast<long long>(rng.below(200)));
    std::vector<Rational> points;
    for (long long r : ranks) points.push_back(space.enumerate(r));

    return SearchInstance{std::move(points), seeded_random_coloring(k, c, rng.next()), m, k, c};
}

} // namespace instances
