#pragma once

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include <rclosure/coloring.hpp>
#include <rclosure/sequence.hpp>

namespace rclosure {

inline constexpr long long kDefaultStepCap = 10000;
inline constexpr long long kDefaultDecodeSearchCap = 100000;

/// One color-neighborhood constraint: the set of points p, distinct from all
/// anchors, with chi({p} union anchors) == color.
struct NeighborhoodAtom {
    int color;
    std::vector<Rational> anchors;
};

/// Symbolic region with decidable membership: the intersection of finitely
/// many open balls and color-neighborhoods. An empty constraint list is the
/// whole space. Constraints are only ever added, so later regions refine
/// earlier ones.
class Region {
public:
    void add_ball(Ball b) { balls_.push_back(std::move(b)); }

    void add_neighborhood(int color, std::vector<Rational> anchors) {
        std::vector<Rational> sorted = anchors;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw distinctness_error("Region: neighborhood anchors must be pairwise distinct");
        neighborhoods_.push_back(NeighborhoodAtom{color, std::move(anchors)});
    }

    const std::vector<Ball>& balls() const { return balls_; }
    const std::vector<NeighborhoodAtom>& neighborhoods() const { return neighborhoods_; }
    bool unconstrained() const { return balls_.empty() && neighborhoods_.empty(); }

private:
    std::vector<Ball> balls_;
    std::vector<NeighborhoodAtom> neighborhoods_;
};

/// Exact conjunction of the region's atom tests. A point equal to any
/// neighborhood anchor fails that atom. Balls are tested newest first; the
/// most recent ball is the tightest and rejects almost everything cheaply.
template <EnumeratedMetricSpace S>
bool region_contains(const Region& r, const S& space, const Coloring& chi, const Rational& p) {
    const auto& balls = r.balls();
    for (auto it = balls.rbegin(); it != balls.rend(); ++it)
        if (!ball_contains(space, *it, p)) return false;
    for (const NeighborhoodAtom& nb : r.neighborhoods()) {
        bool is_anchor = false;
        for (const Rational& a : nb.anchors)
            if (a == p) { is_anchor = true; break; }
        if (is_anchor) return false;
        std::vector<Rational> pts = nb.anchors;
        pts.push_back(p);
        if (chi.evaluate(KSubset(std::move(pts))) != nb.color) return false;
    }
    return true;
}

/// Least enumerated point belonging to the region, scanning indices
/// 1, 2, ..., search_cap. Throws cap_error if the scan budget runs out;
/// this cannot happen when the caller knows a member whose rank bounds
/// the scan.
template <EnumeratedMetricSpace S>
Rational region_min(const Region& r, const S& space, const Coloring& chi, long long search_cap) {
    for (long long n = 1; n <= search_cap; ++n) {
        Rational p = space.enumerate(n);
        if (region_contains(r, space, chi, p)) return p;
    }
    throw cap_error("region_min: no member among the first " + std::to_string(search_cap) +
                    " enumerated points");
}

/// The pair of finite functions the encoding assigns to a point, plus the
/// step count: theta maps each step index i in {k-1,...,s} to the index of
/// the ball center chosen at that step, and delta records the color of each
/// queried subset, keyed by its ascending step-index set. The trace is
/// self-contained: decoding needs only (space, coloring, trace).
struct EncodingTrace {
    int k = 0;
    long long steps = 0;
    std::map<long long, long long> theta;
    std::map<std::vector<long long>, int> delta;

    friend bool operator==(const EncodingTrace&, const EncodingTrace&) = default;
};

/// Encoding ran to completion: x was the minimal element of the final
/// region. chain holds u_1, ..., u_{s+1}, with u_{s+1} == x.
struct Terminated {
    EncodingTrace trace;
    std::vector<Rational> chain;
};

/// The step cap ran out first. The computed points, with x as the designated
/// would-be limit, form a sequence on which validate_monotone passes and
/// whose tail converges to x at rate 2^{1-i}.
struct CapReached {
    MonotoneSequence prefix;
};

using EncodeOutcome = std::variant<Terminated, CapReached>;

inline bool encode_terminated(const EncodeOutcome& outcome) {
    return std::holds_alternative<Terminated>(outcome);
}

/// Per-step record for callers that want the full construction, step by step.
struct EncodeStep {
    long long index;         // i
    long long center_index;  // theta(i)
    Rational center;         // the ball center at this step
    Rational radius;         // 2^{-i}
    std::vector<std::pair<std::vector<long long>, int>> delta; // entries recorded this step
    Rational next_point;     // u_{i+1}
    Region region_after;     // U_{i+1}
};

/// Encode a point against a coloring.
///
/// Seeds u_1,...,u_{k-1} are the first k-1 enumerated points and the initial
/// region is the whole space. Step i (starting at i = k-1) picks the least n
/// with x inside the open ball B(enumerate(n), 2^{-i}), records theta(i) = n,
/// records delta({i} union J) = chi({x, u_i} union {u_j : j in J}) for every
/// (k-2)-subset J of {1,...,i-1}, intersects the region with the recorded
/// neighborhoods and the ball, and takes u_{i+1} as the region's minimal
/// element. Termination is detected after computing u_{i+1}: when it equals
/// x, the trace is complete with s = i.
///
/// On an enumerated space the recursion terminates for every coloring, but
/// only after the ball radius drops below x's distance to every point of
/// smaller rank, so a cap is enforced and CapReached is a first-class
/// outcome rather than an error.
template <EnumeratedMetricSpace S>
EncodeOutcome encode(const S& space, const Coloring& chi, const Rational& x,
                     long long step_cap = kDefaultStepCap,
                     std::vector<EncodeStep>* log = nullptr) {
    const int k = chi.arity();
    if (k < 2) throw parameter_error("encode: coloring arity must be >= 2");
    if (step_cap < 1) throw parameter_error("encode: step cap must be >= 1");

    std::vector<Rational> chain;
    for (long long j = 1; j < k; ++j) {
        Rational seed = space.enumerate(j);
        if (seed == x) throw domain_error("encode: x is one of the k-1 seed elements");
        chain.push_back(std::move(seed));
    }

    const long long x_rank = space.rank(x);
    Region region;
    EncodingTrace trace;
    trace.k = k;

    for (long long i = k - 1;; ++i) {
        const Rational radius = Rational::pow2(-i);
        long long center_index = 0;
        for (long long n = 1;; ++n) {
            // stops at n == rank(x) at the latest: d(x, x) == 0
            if (space.distance(space.enumerate(n), x) < radius) { center_index = n; break; }
        }
        const Rational center = space.enumerate(center_index);
        trace.theta.emplace(i, center_index);

        std::vector<std::pair<std::vector<long long>, int>> step_delta;
        detail::for_each_index_subset(i - 1, k - 2, [&](const std::vector<long long>& js) {
            std::vector<Rational> anchors;
            anchors.reserve(static_cast<std::size_t>(k - 1));
            anchors.push_back(chain[static_cast<std::size_t>(i - 1)]); // u_i
            for (long long j : js) anchors.push_back(chain[static_cast<std::size_t>(j - 1)]);

            std::vector<Rational> query = anchors;
            query.push_back(x);
            const int color = chi.evaluate(KSubset(std::move(query)));

            std::vector<long long> key = js; // ascending, all < i
            key.push_back(i);
            trace.delta.emplace(key, color);
            step_delta.emplace_back(std::move(key), color);
            region.add_neighborhood(color, std::move(anchors));
            return true;
        });
        region.add_ball(Ball(center, radius));

        if (!region_contains(region, space, chi, x))
            throw error("encode: internal invariant violated: x left the region at step " +
                        std::to_string(i));

        Rational next = region_min(region, space, chi, x_rank);
        chain.push_back(next);
        if (log)
            log->push_back(EncodeStep{i, center_index, center, radius,
                                      std::move(step_delta), next, region});

        if (next == x) {
            trace.steps = i;
            return Terminated{std::move(trace), std::move(chain)};
        }
        if (i - (k - 1) + 1 >= step_cap)
            return CapReached{MonotoneSequence(std::move(chain), x)};
    }
}

/// Reconstruct the encoded point from its trace alone: replay the recursion
/// with theta standing in for the minimal-center search and delta standing in
/// for every coloring query against x, then return the minimal element of the
/// final region. decode(encode(x)) == x whenever encode terminated.
///
/// Structural defects in the trace (domain gaps, extraneous entries, colors
/// out of range) raise trace_error. A replay whose region provably empties,
/// or that has no member within search_cap, raises inconsistency_error: the
/// trace was not produced by encode under this coloring.
template <EnumeratedMetricSpace S>
Rational decode(const S& space, const Coloring& chi, const EncodingTrace& trace,
                long long search_cap = kDefaultDecodeSearchCap) {
    const int k = trace.k;
    if (k != chi.arity())
        throw trace_error("decode: trace arity " + std::to_string(k) +
                          " does not match coloring arity " + std::to_string(chi.arity()));
    if (k < 2) throw trace_error("decode: trace arity must be >= 2");
    const long long s = trace.steps;
    if (s < k - 1) throw trace_error("decode: step count precedes the first step index");

    if (static_cast<long long>(trace.theta.size()) != s - (k - 1) + 1)
        throw trace_error("decode: theta domain must be exactly {k-1,...,s}");
    for (long long i = k - 1; i <= s; ++i) {
        const auto it = trace.theta.find(i);
        if (it == trace.theta.end())
            throw trace_error("decode: theta has a gap at step " + std::to_string(i));
        if (it->second < 1)
            throw trace_error("decode: theta value below 1 at step " + std::to_string(i));
    }

    std::size_t expected_delta = 0;
    for (long long i = k - 1; i <= s; ++i) {
        detail::for_each_index_subset(i - 1, k - 2, [&](const std::vector<long long>& js) {
            std::vector<long long> key = js;
            key.push_back(i);
            const auto it = trace.delta.find(key);
            if (it == trace.delta.end())
                throw trace_error("decode: delta is missing an index set at step " + std::to_string(i));
            if (it->second < 0 || it->second >= chi.colors())
                throw trace_error("decode: delta color out of range at step " + std::to_string(i));
            ++expected_delta;
            return true;
        });
    }
    if (trace.delta.size() != expected_delta)
        throw trace_error("decode: delta carries extraneous index sets");

    std::vector<Rational> chain;
    for (long long j = 1; j < k; ++j) chain.push_back(space.enumerate(j));

    Region region;
    std::optional<Rational> lo, hi; // running open interval from the ball atoms
    for (long long i = k - 1; i <= s; ++i) {
        const Rational radius = Rational::pow2(-i);
        const Rational center = space.enumerate(trace.theta.at(i));

        detail::for_each_index_subset(i - 1, k - 2, [&](const std::vector<long long>& js) {
            std::vector<Rational> anchors;
            anchors.push_back(chain[static_cast<std::size_t>(i - 1)]);
            for (long long j : js) anchors.push_back(chain[static_cast<std::size_t>(j - 1)]);
            std::vector<long long> key = js;
            key.push_back(i);
            region.add_neighborhood(trace.delta.at(key), std::move(anchors));
            return true;
        });
        region.add_ball(Ball(center, radius));

        const Rational ball_lo = center - radius;
        const Rational ball_hi = center + radius;
        if (!lo || *lo < ball_lo) lo = ball_lo;
        if (!hi || ball_hi < *hi) hi = ball_hi;
        if (!(*lo < *hi))
            throw inconsistency_error("decode: ball constraints have empty intersection at step " +
                                      std::to_string(i));

        Rational next;
        try {
            next = region_min(region, space, chi, search_cap);
        } catch (const cap_error&) {
            throw inconsistency_error("decode: region emptied during replay (no member within cap)");
        }
        chain.push_back(std::move(next));
    }
    return chain.back();
}

} // namespace rclosure
