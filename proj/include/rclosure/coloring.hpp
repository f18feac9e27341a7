#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <rclosure/prng.hpp>
#include <rclosure/space.hpp>

namespace rclosure {

namespace detail {

// Visit every r-element subset of {1,...,limit} in lexicographic order.
// fn receives the ascending index vector and returns false to stop early.
// Returns true iff every subset was visited.
template <typename Fn>
bool for_each_index_subset(long long limit, int r, Fn&& fn) {
    if (r == 0) {
        static const std::vector<long long> empty;
        return fn(empty);
    }
    if (limit < r) return true;
    std::vector<long long> idx(static_cast<std::size_t>(r));
    std::iota(idx.begin(), idx.end(), 1);
    for (;;) {
        if (!fn(static_cast<const std::vector<long long>&>(idx))) return false;
        int pos = r - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == limit - (r - 1 - pos)) --pos;
        if (pos < 0) return true;
        ++idx[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace detail

/// A set of exactly k distinct points, stored in ascending numeric order.
/// Construction sorts the input and rejects duplicates, so evaluating any
/// permutation of the same points yields the same subset.
class KSubset {
public:
    explicit KSubset(std::vector<Rational> pts) : points_(std::move(pts)) {
        std::sort(points_.begin(), points_.end());
        if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
            throw distinctness_error("KSubset: points must be pairwise distinct");
    }

    KSubset(std::initializer_list<Rational> pts) : KSubset(std::vector<Rational>(pts)) {}

    std::size_t size() const { return points_.size(); }
    const Rational& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Rational>& points() const { return points_; }

    /// Subset extended by one more point; rejects a point already present.
    KSubset with(const Rational& extra) const {
        std::vector<Rational> pts = points_;
        pts.push_back(extra);
        return KSubset(std::move(pts));
    }

private:
    std::vector<Rational> points_;
};

/// A total coloring of the k-element subsets of the space with colors
/// {0, ..., c-1}. Represented as an evaluator rather than a table so the
/// domain may be unbounded; the encoder queries colors at points chosen
/// dynamically.
class Coloring {
public:
    using Evaluator = std::function<int(const KSubset&)>;

    Coloring(int arity, int colors, Evaluator evaluator)
        : arity_(arity), colors_(colors), evaluator_(std::move(evaluator)) {
        if (arity_ < 1) throw parameter_error("Coloring: arity must be >= 1");
        if (colors_ < 1) throw parameter_error("Coloring: color count must be >= 1");
        if (!evaluator_) throw parameter_error("Coloring: null evaluator");
    }

    int arity() const { return arity_; }
    int colors() const { return colors_; }

    int evaluate(const KSubset& s) const {
        if (s.size() != static_cast<std::size_t>(arity_))
            throw arity_error("Coloring: subset of size " + std::to_string(s.size()) +
                              " evaluated under arity " + std::to_string(arity_));
        const int c = evaluator_(s);
        if (c < 0 || c >= colors_)
            throw error("Coloring: evaluator produced color " + std::to_string(c) +
                        " outside {0,...," + std::to_string(colors_ - 1) + "}");
        return c;
    }

private:
    int arity_;
    int colors_;
    Evaluator evaluator_;
};

/// Triple coloring on the line: with x1 < x2 < x3, color 0 iff
/// |x1 - x2| <= |x2 - x3| (ties included), else 1.
inline int eval_distance_triple(const KSubset& s) {
    if (s.size() != 3) throw arity_error("eval_distance_triple: needs exactly 3 points");
    return abs(s[0] - s[1]) <= abs(s[1] - s[2]) ? 0 : 1;
}

/// Pair coloring comparing numeric order against enumeration order: with
/// x1 < x2, color 0 iff x2 precedes x1 in the enumeration, else 1.
template <EnumeratedMetricSpace S>
int eval_sierpinski_pair(const S& space, const KSubset& s) {
    if (s.size() != 2) throw arity_error("eval_sierpinski_pair: needs exactly 2 points");
    return space.rank(s[1]) <= space.rank(s[0]) ? 0 : 1;
}

/// Triple coloring: with x1 < x2 < x3, color 0 iff the middle point is the
/// enumeration-maximal one (x1 and x3 both precede x2), else 1.
template <EnumeratedMetricSpace S>
int eval_rank_hat_triple(const S& space, const KSubset& s) {
    if (s.size() != 3) throw arity_error("eval_rank_hat_triple: needs exactly 3 points");
    const long long middle = space.rank(s[1]);
    return space.rank(s[0]) <= middle && space.rank(s[2]) <= middle ? 0 : 1;
}

inline Coloring distance_triple_coloring() {
    return Coloring(3, 2, [](const KSubset& s) { return eval_distance_triple(s); });
}

template <EnumeratedMetricSpace S>
Coloring sierpinski_pair_coloring(S space) {
    return Coloring(2, 2, [space](const KSubset& s) { return eval_sierpinski_pair(space, s); });
}

template <EnumeratedMetricSpace S>
Coloring rank_hat_triple_coloring(S space) {
    return Coloring(3, 2, [space](const KSubset& s) { return eval_rank_hat_triple(space, s); });
}

inline Coloring constant_coloring(int k, int c) {
    if (k < 2) throw parameter_error("constant_coloring: arity must be >= 2");
    return Coloring(k, c, [](const KSubset&) { return 0; });
}

/// Deterministic pseudo-random coloring: a pure function of the canonical
/// subset serialization and the seed, so the same set always gets the same
/// color regardless of presentation order, platform, or run.
inline Coloring seeded_random_coloring(int k, int c, std::uint64_t seed) {
    if (k < 2) throw parameter_error("seeded_random_coloring: arity must be >= 2");
    if (c < 1) throw parameter_error("seeded_random_coloring: color count must be >= 1");
    return Coloring(k, c, [c, seed](const KSubset& s) {
        std::string canon;
        for (const Rational& p : s.points()) {
            canon += p.to_string();
            canon += '|';
        }
        const std::uint64_t h = splitmix64(detail::fnv1a64(canon) ^ seed);
        return static_cast<int>(h % static_cast<std::uint64_t>(c));
    });
}

/// The coloring obtained by fixing `anchor` as a permanent member of every
/// evaluated subset: collapse(chi, a)(S) == chi(S union {a}). Evaluating a
/// subset that already contains the anchor raises distinctness_error.
inline Coloring collapse(const Coloring& chi, const Rational& anchor) {
    if (chi.arity() < 2) throw parameter_error("collapse: coloring arity must be >= 2");
    return Coloring(chi.arity() - 1, chi.colors(),
                    [chi, anchor](const KSubset& s) { return chi.evaluate(s.with(anchor)); });
}

} // namespace rclosure
