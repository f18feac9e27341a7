#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include <rclosure/rational.hpp>

namespace rclosure {

/// A finite prefix u_1, u_2, ... of a would-be convergent sequence together
/// with its designated limit candidate. Terms are pairwise distinct and the
/// limit candidate never appears among them.
struct MonotoneSequence {
    MonotoneSequence(std::vector<Rational> terms_in, Rational limit)
        : terms(std::move(terms_in)), limit_candidate(std::move(limit)) {
        std::vector<Rational> sorted = terms;
        sorted.push_back(limit_candidate);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw distinctness_error("MonotoneSequence: terms and limit candidate must be pairwise distinct");
    }

    std::vector<Rational> terms;
    Rational limit_candidate;
};

/// Evidence that `hub` is approached inside `set`: for every listed epsilon,
/// a distinct member of the set within that distance of the hub.
struct LimitWitness {
    std::vector<Rational> set;
    Rational hub;
    std::vector<Rational> epsilons;
    std::vector<Rational> witnesses; // witnesses[i] pairs with epsilons[i]
};

} // namespace rclosure
