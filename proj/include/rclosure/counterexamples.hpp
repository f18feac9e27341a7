#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include <rclosure/coloring.hpp>

namespace rclosure {

/// Three points r1 < r2 < r3 whose middle element is enumeration-maximal:
/// rank(r1) <= rank(r2) and rank(r3) <= rank(r2). Such a triple is the
/// obstruction to monochromaticity near a limit point: its two pairs take
/// different colors under the pair coloring and the triple itself takes
/// color 0 under the rank-hat coloring.
struct SpecialTriple {
    Rational r1, r2, r3;
};

template <EnumeratedMetricSpace S>
bool is_special_triple(const S& space, const SpecialTriple& t) {
    if (!(t.r1 < t.r2 && t.r2 < t.r3)) return false;
    const long long middle = space.rank(t.r2);
    return space.rank(t.r1) <= middle && space.rank(t.r3) <= middle;
}

/// Constructive search for a special triple anchored at `hub`, mirroring the
/// two-sided limit-point argument at finite scale.
///
/// On each side of the hub (below first, then above), candidates for the
/// outer point are tried in enumeration-rank order: a candidate qualifies
/// when it outranks the hub and every set member strictly between it and the
/// hub also outranks the hub; the middle point is then the least-ranked
/// member strictly between that outranks the candidate. A triple built on
/// the upper side has its endpoints swapped into ascending order. Returns
/// nullopt when neither side admits a choice -- a legitimate outcome for a
/// finite set.
template <EnumeratedMetricSpace S>
std::optional<SpecialTriple> find_special_triple(const S& space,
                                                 const std::vector<Rational>& points,
                                                 const Rational& hub) {
    bool hub_present = false;
    for (const Rational& p : points)
        if (p == hub) { hub_present = true; break; }
    if (!hub_present) throw domain_error("find_special_triple: hub is not a member of the set");

    struct RankedPoint {
        Rational value;
        long long rank;
    };
    std::vector<RankedPoint> below, above;
    for (const Rational& p : points) {
        if (p == hub) continue;
        (p < hub ? below : above).push_back(RankedPoint{p, space.rank(p)});
    }
    const long long hub_rank = space.rank(hub);

    const auto try_side = [&](std::vector<RankedPoint>& side, bool is_below)
        -> std::optional<SpecialTriple> {
        std::sort(side.begin(), side.end(),
                  [](const RankedPoint& a, const RankedPoint& b) { return a.rank < b.rank; });
        const auto strictly_between = [&](const Rational& w, const Rational& outer) {
            return is_below ? (outer < w && w < hub) : (hub < w && w < outer);
        };
        for (const RankedPoint& outer : side) {
            if (outer.rank <= hub_rank) continue;
            bool window_ok = true;
            for (const RankedPoint& w : side) {
                if (!strictly_between(w.value, outer.value)) continue;
                if (w.rank <= hub_rank) { window_ok = false; break; }
            }
            if (!window_ok) continue;
            const RankedPoint* middle = nullptr;
            for (const RankedPoint& w : side) { // rank order: first hit is least-ranked
                if (!strictly_between(w.value, outer.value)) continue;
                if (w.rank > outer.rank) { middle = &w; break; }
            }
            if (!middle) continue;
            if (is_below) return SpecialTriple{outer.value, middle->value, hub};
            return SpecialTriple{hub, middle->value, outer.value};
        }
        return std::nullopt;
    };

    if (auto t = try_side(below, true)) return t;
    if (auto t = try_side(above, false)) return t;
    return std::nullopt;
}

struct SpecialTripleColors {
    int pair12; // always 1
    int pair23; // always 0
    int hat;    // always 0
};

/// Evaluate and assert the color pattern a special triple forces: the two
/// pairs differ under the pair coloring (1 then 0) and the triple is colored
/// 0 under the rank-hat coloring. Raises precondition_error if the triple is
/// not special; a pattern mismatch would mean a coloring bug and raises the
/// base error.
template <EnumeratedMetricSpace S>
SpecialTripleColors verify_special_triple_colors(const S& space, const SpecialTriple& t) {
    if (!is_special_triple(space, t))
        throw precondition_error("verify_special_triple_colors: triple violates the rank invariants");
    SpecialTripleColors colors{};
    colors.pair12 = eval_sierpinski_pair(space, KSubset{t.r1, t.r2});
    colors.pair23 = eval_sierpinski_pair(space, KSubset{t.r2, t.r3});
    colors.hat = eval_rank_hat_triple(space, KSubset{t.r1, t.r2, t.r3});
    if (colors.pair12 != 1 || colors.pair23 != 0 || colors.hat != 0)
        throw error("verify_special_triple_colors: color contract violated");
    return colors;
}

/// Two point clusters around distinct limit candidates l1 < l2, every member
/// strictly within (l2 - l1)/5 of its center. Members are stored sorted
/// ascending.
class ClusterSpec {
public:
    ClusterSpec(Rational l1, Rational l2, std::vector<Rational> near_l1,
                std::vector<Rational> near_l2)
        : l1_(std::move(l1)), l2_(std::move(l2)),
          near_l1_(std::move(near_l1)), near_l2_(std::move(near_l2)) {
        if (!(l1_ < l2_)) throw precondition_error("ClusterSpec: requires l1 < l2");
        const Rational bound = h() / Rational(5);
        const auto check = [&](const std::vector<Rational>& members, const Rational& center,
                               const char* which) {
            for (const Rational& m : members)
                if (!(abs(m - center) < bound))
                    throw precondition_error(std::string("ClusterSpec: member ") + m.to_string() +
                                             " is not within h/5 of " + which);
        };
        check(near_l1_, l1_, "l1");
        check(near_l2_, l2_, "l2");
        std::sort(near_l1_.begin(), near_l1_.end());
        std::sort(near_l2_.begin(), near_l2_.end());
        if (std::adjacent_find(near_l1_.begin(), near_l1_.end()) != near_l1_.end() ||
            std::adjacent_find(near_l2_.begin(), near_l2_.end()) != near_l2_.end())
            throw distinctness_error("ClusterSpec: cluster members must be pairwise distinct");
    }

    const Rational& l1() const { return l1_; }
    const Rational& l2() const { return l2_; }
    Rational h() const { return l2_ - l1_; }
    const std::vector<Rational>& near_l1() const { return near_l1_; }
    const std::vector<Rational>& near_l2() const { return near_l2_; }

private:
    Rational l1_, l2_;
    std::vector<Rational> near_l1_, near_l2_;
};

struct TwoLimitRefutation {
    std::array<Rational, 3> one_triple;  // one point near l1, two near l2
    int one_color;                       // always 1
    std::array<Rational, 3> zero_triple; // two points near l1, one near l2
    int zero_color;                      // always 0
};

/// Produce one triple of each color from the two clusters, refuting
/// monochromaticity for any set with two limit points: a point near l1 with
/// two near l2 forces |r1-r2| > 3h/5 > 2h/5 >= |r2-r3| (color 1), and two
/// points near l1 with one near l2 force the opposite comparison (color 0).
/// Both triples are evaluated and the distance chain asserted exactly.
inline TwoLimitRefutation refute_two_limits(const ClusterSpec& cluster) {
    const auto& left = cluster.near_l1();
    const auto& right = cluster.near_l2();
    if (left.empty())
        throw insufficiency_error("refute_two_limits: color-1 triple needs a point near l1");
    if (right.size() < 2)
        throw insufficiency_error("refute_two_limits: color-1 triple needs two points near l2");
    if (left.size() < 2)
        throw insufficiency_error("refute_two_limits: color-0 triple needs two points near l1");
    // right nonempty already guaranteed

    TwoLimitRefutation out;
    out.one_triple = {left.front(), right[0], right[1]};
    out.zero_triple = {left[0], left[1], right.back()};
    out.one_color = eval_distance_triple(KSubset{out.one_triple[0], out.one_triple[1], out.one_triple[2]});
    out.zero_color = eval_distance_triple(KSubset{out.zero_triple[0], out.zero_triple[1], out.zero_triple[2]});

    const Rational h = cluster.h();
    const Rational gap12 = abs(out.one_triple[0] - out.one_triple[1]);
    const Rational gap23 = abs(out.one_triple[1] - out.one_triple[2]);
    if (!(gap12 > Rational(3) * h / Rational(5)) || !(gap23 <= Rational(2) * h / Rational(5)) ||
        out.one_color != 1 || out.zero_color != 0)
        throw error("refute_two_limits: distance chain violated");
    return out;
}

/// Exhaustively check that no 4-subset of `points` has all four of its
/// triples colored 0 under the rank-hat coloring. Returns the offending
/// 4-subset if one exists -- which would signal an implementation bug, since
/// two overlapping all-zero triples force contradictory rank comparisons --
/// and nullopt on pass.
template <EnumeratedMetricSpace S>
std::optional<std::array<Rational, 4>> check_no_all_zero_quad(const S& space,
                                                              const std::vector<Rational>& points) {
    std::vector<Rational> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw distinctness_error("check_no_all_zero_quad: points must be pairwise distinct");
    const std::size_t n = sorted.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    if (eval_rank_hat_triple(space, KSubset{sorted[a], sorted[b], sorted[c]}) != 0)
                        continue;
                    if (eval_rank_hat_triple(space, KSubset{sorted[a], sorted[b], sorted[d]}) != 0)
                        continue;
                    if (eval_rank_hat_triple(space, KSubset{sorted[a], sorted[c], sorted[d]}) != 0)
                        continue;
                    if (eval_rank_hat_triple(space, KSubset{sorted[b], sorted[c], sorted[d]}) != 0)
                        continue;
                    return std::array<Rational, 4>{sorted[a], sorted[b], sorted[c], sorted[d]};
                }
    return std::nullopt;
}

} // namespace rclosure
