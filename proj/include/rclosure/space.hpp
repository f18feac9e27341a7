#pragma once

#include <concepts>
#include <numeric>

#include <rclosure/rational.hpp>

namespace rclosure {

namespace detail {

// Euler's totient by trial division; inputs here are small class sums.
inline long long totient(long long n) {
    long long result = n;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

} // namespace detail

/// The canonical enumerated metric space: the rationals with d(a,b) = |a-b|.
///
/// enumerate() lists every reduced fraction p/q exactly once: 0 first, then
/// classes of increasing |p| + q, within a class by increasing q, and the
/// negative of a pair immediately before the positive. The enumeration index
/// plays two roles at once: it is the well-order used wherever a "minimal
/// element" is required, and the sequence itself is the dense set whose
/// members serve as ball centers.
class RationalLine {
public:
    /// n-th point of the enumeration, n >= 1.
    Rational enumerate(long long n) const {
        if (n < 1) throw parameter_error("enumerate: index must be >= 1");
        if (n == 1) return Rational(0);
        long long remaining = n - 1;
        long long sum = 2;
        for (;; ++sum) {
            const long long in_class = 2 * detail::totient(sum);
            if (remaining <= in_class) break;
            remaining -= in_class;
        }
        const long long pair_index = (remaining - 1) / 2;
        const bool negative = (remaining - 1) % 2 == 0;
        long long q = 0;
        for (long long cand = 1, seen = 0; cand < sum; ++cand) {
            if (std::gcd(cand, sum) != 1) continue;
            if (seen++ == pair_index) { q = cand; break; }
        }
        const long long p = sum - q;
        return Rational(negative ? -p : p, q);
    }

    /// Inverse of enumerate: rank(enumerate(n)) == n.
    long long rank(const Rational& p) const {
        const mpz_class magnitude = abs(p.numerator()) + p.denominator();
        if (!magnitude.fits_slong_p())
            throw parameter_error("rank: |numerator| + denominator exceeds the supported range");
        const long long sum = magnitude.get_si();
        if (sum == 1) return 1; // p == 0
        long long r = 1;
        for (long long t = 2; t < sum; ++t) r += 2 * detail::totient(t);
        const long long q = p.denominator().get_si();
        long long smaller_q = 0;
        for (long long cand = 1; cand < q; ++cand)
            if (std::gcd(cand, sum) == 1) ++smaller_q;
        return r + 2 * smaller_q + (p.sign() < 0 ? 1 : 2);
    }

    Rational distance(const Rational& a, const Rational& b) const { return abs(a - b); }
};

/// An enumerated metric space: a bijective enumeration of the points starting
/// at index 1 (whose index order doubles as the well-order and whose sequence
/// doubles as the dense set) plus an exact metric.
template <typename S>
concept EnumeratedMetricSpace = requires(const S& s, const Rational& p, long long n) {
    { s.enumerate(n) } -> std::convertible_to<Rational>;
    { s.rank(p) } -> std::convertible_to<long long>;
    { s.distance(p, p) } -> std::convertible_to<Rational>;
};

static_assert(EnumeratedMetricSpace<RationalLine>);

/// Open ball: membership is d(center, p) < radius, strictly.
struct Ball {
    Ball(Rational c, Rational r) : center(std::move(c)), radius(std::move(r)) {
        if (radius.sign() <= 0) throw parameter_error("Ball: radius must be strictly positive");
    }

    Rational center;
    Rational radius;
};

template <EnumeratedMetricSpace S>
bool ball_contains(const S& space, const Ball& b, const Rational& p) {
    return space.distance(b.center, p) < b.radius;
}

} // namespace rclosure
