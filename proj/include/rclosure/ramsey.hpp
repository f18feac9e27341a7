#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <rclosure/coloring.hpp>
#include <rclosure/sequence.hpp>

namespace rclosure {

namespace detail {

template <EnumeratedMetricSpace S>
std::vector<Rational> sorted_by_rank(const S& space, std::vector<Rational> points) {
    std::vector<std::pair<long long, Rational>> ranked;
    ranked.reserve(points.size());
    for (Rational& p : points) ranked.emplace_back(space.rank(p), std::move(p));
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < ranked.size(); ++i)
        if (ranked[i].first == ranked[i + 1].first)
            throw distinctness_error("points must be pairwise distinct");
    std::vector<Rational> out;
    out.reserve(ranked.size());
    for (auto& [rank, p] : ranked) out.push_back(std::move(p));
    return out;
}

// Depth-first search over subsets of `points` (which must be in rank order),
// extending in index order so the first full-size monochromatic subset found
// is the rank-lexicographically least one. A partial set is pruned as soon as
// any completed arity-subset conflicts with the committed color. `accept` may
// reject a completed subset, in which case the search continues.
template <typename Accept>
class MonochromaticSearch {
public:
    MonochromaticSearch(const std::vector<Rational>& points, const Coloring& chi,
                        std::size_t target, std::optional<int> required_color, Accept accept)
        : points_(points), chi_(chi), target_(target),
          committed_(required_color), accept_(std::move(accept)) {}

    std::optional<std::vector<Rational>> run() {
        if (target_ == 0 || points_.size() < target_) return std::nullopt;
        current_.reserve(target_);
        if (dfs(0)) return current_;
        return std::nullopt;
    }

private:
    bool dfs(std::size_t start) {
        if (current_.size() == target_) return accept_(current_);
        for (std::size_t idx = start; idx < points_.size(); ++idx) {
            if (points_.size() - idx < target_ - current_.size()) break;
            const std::optional<int> saved = committed_;
            if (!try_add(points_[idx])) continue;
            if (dfs(idx + 1)) return true;
            current_.pop_back();
            committed_ = saved;
        }
        return false;
    }

    bool try_add(const Rational& candidate) {
        const int k = chi_.arity();
        if (current_.size() + 1 >= static_cast<std::size_t>(k)) {
            int local = committed_.value_or(-1);
            bool ok = true;
            detail::for_each_index_subset(
                static_cast<long long>(current_.size()), k - 1,
                [&](const std::vector<long long>& positions) {
                    std::vector<Rational> pts;
                    pts.reserve(static_cast<std::size_t>(k));
                    for (long long pos : positions)
                        pts.push_back(current_[static_cast<std::size_t>(pos - 1)]);
                    pts.push_back(candidate);
                    const int c = chi_.evaluate(KSubset(std::move(pts)));
                    if (local == -1) { local = c; return true; }
                    if (c != local) { ok = false; return false; }
                    return true;
                });
            if (!ok) return false;
            if (local != -1) committed_ = local;
        }
        current_.push_back(candidate);
        return true;
    }

    const std::vector<Rational>& points_;
    const Coloring& chi_;
    std::size_t target_;
    std::optional<int> committed_;
    Accept accept_;
    std::vector<Rational> current_;
};

} // namespace detail

/// First violation of the monotone-coloring property, if any: a set of term
/// indices (1-based, ascending) and a later index alpha such that replacing
/// the limit candidate by the alpha-th term changes the color.
struct MonotoneViolation {
    std::vector<long long> indices;
    long long alpha;
    int color_with_limit;
    int color_with_term;
};

/// Check that for every (k-1)-subset of term indices and every index alpha
/// beyond the subset's maximum, the subset's points color identically with
/// the limit candidate and with the alpha-th term. Returns the first
/// violation in lexicographic subset order (then ascending alpha), or
/// nullopt when the property holds everywhere.
inline std::optional<MonotoneViolation> validate_monotone(const MonotoneSequence& seq,
                                                          const Coloring& chi) {
    const int k = chi.arity();
    if (k < 2) throw arity_error("validate_monotone: coloring arity must be >= 2");
    const long long m = static_cast<long long>(seq.terms.size());
    if (m < k - 1)
        throw arity_error("validate_monotone: sequence has fewer than k-1 terms");

    std::optional<MonotoneViolation> violation;
    detail::for_each_index_subset(m, k - 1, [&](const std::vector<long long>& indices) {
        std::vector<Rational> base_pts;
        base_pts.reserve(static_cast<std::size_t>(k));
        for (long long a : indices) base_pts.push_back(seq.terms[static_cast<std::size_t>(a - 1)]);

        std::vector<Rational> with_limit = base_pts;
        with_limit.push_back(seq.limit_candidate);
        const int base_color = chi.evaluate(KSubset(std::move(with_limit)));

        for (long long alpha = indices.back() + 1; alpha <= m; ++alpha) {
            std::vector<Rational> with_term = base_pts;
            with_term.push_back(seq.terms[static_cast<std::size_t>(alpha - 1)]);
            const int term_color = chi.evaluate(KSubset(std::move(with_term)));
            if (term_color != base_color) {
                violation = MonotoneViolation{indices, alpha, base_color, term_color};
                return false;
            }
        }
        return true;
    });
    return violation;
}

/// Convergence-rate schedule matched to the encoder's cap-reached guarantee:
/// entry t (0-based) is 2^{1-t}, i.e. 2, 1, 1/2, 1/4, ...
inline std::vector<Rational> geometric_rate(std::size_t count) {
    std::vector<Rational> rate;
    rate.reserve(count);
    for (std::size_t t = 0; t < count; ++t)
        rate.push_back(Rational::pow2(1 - static_cast<long long>(t)));
    return rate;
}

/// Quantitative limit check: term t must satisfy d(term, limit) < rate[t].
/// Returns the position of the first violating term, or nullopt when every
/// term is inside its allowance (vacuously so for an empty sequence).
template <EnumeratedMetricSpace S>
std::optional<std::size_t> validate_limit(const S& space, const MonotoneSequence& seq,
                                          std::span<const Rational> rate) {
    if (rate.size() < seq.terms.size())
        throw parameter_error("validate_limit: rate shorter than the term sequence");
    for (std::size_t t = 0; t < rate.size(); ++t) {
        if (rate[t].sign() <= 0)
            throw parameter_error("validate_limit: rate entries must be strictly positive");
        if (t > 0 && rate[t] > rate[t - 1])
            throw parameter_error("validate_limit: rate must be descending");
    }
    for (std::size_t t = 0; t < seq.terms.size(); ++t)
        if (!(space.distance(seq.terms[t], seq.limit_candidate) < rate[t])) return t;
    return std::nullopt;
}

/// Exhaustive search for an m-subset of `points` all of whose arity-subsets
/// share one color (optionally a required color). Points are explored in
/// enumeration-rank order with conflict pruning, so the returned subset is
/// the rank-lexicographically least monochromatic one; it is reported sorted
/// by numeric value. Returns nullopt when no such subset exists.
template <EnumeratedMetricSpace S>
std::optional<std::vector<Rational>> find_monochromatic(const S& space,
                                                        const std::vector<Rational>& points,
                                                        const Coloring& chi, std::size_t m,
                                                        std::optional<int> required_color = std::nullopt) {
    if (m < static_cast<std::size_t>(chi.arity()))
        throw parameter_error("find_monochromatic: target size below coloring arity");
    if (required_color && (*required_color < 0 || *required_color >= chi.colors()))
        throw parameter_error("find_monochromatic: required color out of range");
    if (points.size() < m) return std::nullopt;

    const std::vector<Rational> ranked = detail::sorted_by_rank(space, points);
    detail::MonochromaticSearch search(ranked, chi, m, required_color,
                                       [](const std::vector<Rational>&) { return true; });
    auto found = search.run();
    if (found) std::sort(found->begin(), found->end());
    return found;
}

/// The extraction step: collapse the coloring onto the limit candidate,
/// search the terms for an (m-1)-subset monochromatic under the collapsed
/// coloring, and return it together with the limit candidate. Requires the
/// monotone property (monotonicity_error otherwise), which is exactly what
/// makes the returned set monochromatic under the original coloring.
template <EnumeratedMetricSpace S>
std::optional<std::vector<Rational>> erdos_rado_extract(const S& space, const MonotoneSequence& seq,
                                                        const Coloring& chi, std::size_t m) {
    if (m < static_cast<std::size_t>(chi.arity()))
        throw parameter_error("erdos_rado_extract: target size below coloring arity");
    if (validate_monotone(seq, chi))
        throw monotonicity_error("erdos_rado_extract: sequence fails the monotone property");

    const Coloring collapsed = collapse(chi, seq.limit_candidate);
    auto sub = find_monochromatic(space, seq.terms, collapsed, m - 1);
    if (!sub) return std::nullopt;
    sub->push_back(seq.limit_candidate);
    std::sort(sub->begin(), sub->end());
    return sub;
}

struct LimitSearchResult {
    LimitWitness witness;
    bool monochromatic; // re-verified exhaustively, not trusted from the search
};

/// Search for an m-subset that is monochromatic AND contains a hub point
/// approached inside the subset: for every listed epsilon there is a distinct
/// member within that distance of the hub. Monochromatic candidates are
/// visited in rank-lexicographic order; hubs are tried in rank order and each
/// epsilon takes the least-ranked witness, so the result is deterministic.
template <EnumeratedMetricSpace S>
std::optional<LimitSearchResult> find_limit_monochromatic(const S& space,
                                                          const std::vector<Rational>& points,
                                                          const Coloring& chi, std::size_t m,
                                                          const std::vector<Rational>& epsilons) {
    if (epsilons.empty())
        throw parameter_error("find_limit_monochromatic: at least one epsilon is required");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (epsilons[i].sign() <= 0)
            throw parameter_error("find_limit_monochromatic: epsilons must be strictly positive");
        if (i > 0 && epsilons[i] > epsilons[i - 1])
            throw parameter_error("find_limit_monochromatic: epsilons must be descending");
    }
    if (m == 0 || points.size() < m) return std::nullopt;

    const std::vector<Rational> ranked = detail::sorted_by_rank(space, points);

    std::optional<LimitWitness> witness;
    auto accept = [&](const std::vector<Rational>& subset) {
        for (const Rational& hub : subset) { // subset is in rank order
            std::vector<Rational> found;
            found.reserve(epsilons.size());
            for (const Rational& eps : epsilons) {
                const Rational* best = nullptr;
                for (const Rational& w : subset) {
                    if (w == hub) continue;
                    if (space.distance(w, hub) < eps) { best = &w; break; }
                }
                if (!best) break;
                found.push_back(*best);
            }
            if (found.size() == epsilons.size()) {
                std::vector<Rational> set = subset;
                std::sort(set.begin(), set.end());
                witness = LimitWitness{std::move(set), hub, epsilons, std::move(found)};
                return true;
            }
        }
        return false;
    };

    detail::MonochromaticSearch search(ranked, chi, m, std::nullopt, accept);
    if (!search.run()) return std::nullopt;

    // independent exhaustive recheck of monochromaticity
    bool mono = true;
    if (witness->set.size() >= static_cast<std::size_t>(chi.arity())) {
        std::optional<int> color;
        mono = detail::for_each_index_subset(
            static_cast<long long>(witness->set.size()), chi.arity(),
            [&](const std::vector<long long>& pos) {
                std::vector<Rational> pts;
                for (long long q : pos) pts.push_back(witness->set[static_cast<std::size_t>(q - 1)]);
                const int c = chi.evaluate(KSubset(std::move(pts)));
                if (!color) { color = c; return true; }
                return c == *color;
            });
    }
    return LimitSearchResult{std::move(*witness), mono};
}

} // namespace rclosure
