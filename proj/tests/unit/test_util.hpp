#pragma once

#include <random>
#include <vector>

#include "multitor/ring.hpp"

namespace multitor::testutil {

using Rng = std::mt19937_64;

inline Poly random_poly(const RingPtr& ring, Rng& rng, int max_terms = 4, int max_deg = 3,
                        int max_coeff = 5, bool allow_zero = true) {
    std::uniform_int_distribution<int> nterms(allow_zero ? 0 : 1, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Exponents e(static_cast<std::size_t>(ring->nvars()), 0);
        int remaining = deg(rng);
        for (int d = 0; d < remaining && ring->nvars() > 0; ++d) {
            std::uniform_int_distribution<int> var(0, ring->nvars() - 1);
            ++e[static_cast<std::size_t>(var(rng))];
        }
        terms.push_back(Term{std::move(e), Scalar(coeff(rng))});
    }
    return Poly::from_terms(ring, std::move(terms));
}

inline Poly random_nonzero_poly(const RingPtr& ring, Rng& rng, int max_terms = 4,
                                int max_deg = 3, int max_coeff = 5) {
    for (;;) {
        Poly p = random_poly(ring, rng, max_terms, max_deg, max_coeff, false);
        if (!p.is_zero())
            return p;
    }
}

inline Exponents random_exponents(const RingPtr& ring, Rng& rng, int max_deg = 4) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    Exponents e(static_cast<std::size_t>(ring->nvars()), 0);
    for (int d = deg(rng); d > 0 && ring->nvars() > 0; --d) {
        std::uniform_int_distribution<int> var(0, ring->nvars() - 1);
        ++e[static_cast<std::size_t>(var(rng))];
    }
    return e;
}

// random monomial (as a polynomial) with small degree, nonzero
inline Poly random_monomial(const RingPtr& ring, Rng& rng, int max_deg = 3) {
    return Poly::monomial(ring, random_exponents(ring, rng, max_deg), 1);
}

} // namespace multitor::testutil
