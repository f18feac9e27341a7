#pragma once

// Independent brute-force re-implementations used to cross-check library
// results. Everything here is deliberately written from the definitions,
// without going through the search/encoding code paths under test.

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include <rclosure/coloring.hpp>

namespace oracles {

using rclosure::Coloring;
using rclosure::KSubset;
using rclosure::Rational;

// All reduced fractions p/q with |p| + q <= max_sum, sorted by the canonical
// key (|p| + q, then q, then negative before positive), zero first. Serves as
// the independent model of the enumeration.
inline std::vector<Rational> enumeration_by_sorting(long long max_sum) {
    struct Entry {
        long long sum, q;
        int sign; // 0 = zero, 1 = negative, 2 = positive
        Rational value;
    };
    std::vector<Entry> entries;
    entries.push_back(Entry{1, 1, 0, Rational(0)});
    for (long long sum = 2; sum <= max_sum; ++sum)
        for (long long q = 1; q < sum; ++q) {
            const long long p = sum - q;
            if (std::gcd(p, q) != 1) continue;
            entries.push_back(Entry{sum, q, 1, Rational(-p, q)});
            entries.push_back(Entry{sum, q, 2, Rational(p, q)});
        }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.sum, a.q, a.sign) < std::tie(b.sum, b.q, b.sign);
    });
    std::vector<Rational> out;
    out.reserve(entries.size());
    for (Entry& e : entries) out.push_back(std::move(e.value));
    return out;
}

// Direct formulas for the three named colorings, written against raw points.
inline int direct_distance_color(Rational a, Rational b, Rational c) {
    std::vector<Rational> v{std::move(a), std::move(b), std::move(c)};
    std::sort(v.begin(), v.end());
    const Rational left = v[1] - v[0];
    const Rational right = v[2] - v[1];
    return (left < right || left == right) ? 0 : 1;
}

template <typename Space>
int direct_sierpinski_color(const Space& space, Rational a, Rational b) {
    if (b < a) std::swap(a, b);
    return space.rank(b) <= space.rank(a) ? 0 : 1;
}

template <typename Space>
int direct_rank_hat_color(const Space& space, Rational a, Rational b, Rational c) {
    std::vector<Rational> v{std::move(a), std::move(b), std::move(c)};
    std::sort(v.begin(), v.end());
    const long long mid = space.rank(v[1]);
    return (space.rank(v[0]) <= mid && space.rank(v[2]) <= mid) ? 0 : 1;
}

namespace detail {

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t r = idx.size();
    std::size_t pos = r;
    while (pos > 0 && idx[pos - 1] == n - (r - pos) - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < r; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

} // namespace detail

// First monochromatic m-subset in rank-lexicographic order, found by complete
// enumeration of every m-combination. Returns the subset sorted by value.
template <typename Space>
std::optional<std::vector<Rational>> brute_monochromatic(const Space& space,
                                                         std::vector<Rational> points,
                                                         const Coloring& chi, std::size_t m,
                                                         std::optional<int> required = std::nullopt) {
    if (points.size() < m || m == 0) return std::nullopt;
    std::sort(points.begin(), points.end(), [&](const Rational& a, const Rational& b) {
        return space.rank(a) < space.rank(b);
    });
    const std::size_t k = static_cast<std::size_t>(chi.arity());

    std::vector<std::size_t> pick(m);
    std::iota(pick.begin(), pick.end(), 0);
    do {
        std::vector<Rational> subset;
        subset.reserve(m);
        for (std::size_t i : pick) subset.push_back(points[i]);

        bool mono = true;
        std::optional<int> color = required;
        if (m >= k) {
            std::vector<std::size_t> sub(k);
            std::iota(sub.begin(), sub.end(), 0);
            do {
                std::vector<Rational> pts;
                pts.reserve(k);
                for (std::size_t i : sub) pts.push_back(subset[i]);
                const int c = chi.evaluate(KSubset(std::move(pts)));
                if (!color) color = c;
                else if (*color != c) { mono = false; break; }
            } while (detail::next_combination(sub, m));
        }
        if (mono) {
            std::sort(subset.begin(), subset.end());
            return subset;
        }
    } while (detail::next_combination(pick, points.size()));
    return std::nullopt;
}

} // namespace oracles
