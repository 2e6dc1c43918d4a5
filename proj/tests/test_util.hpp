#pragma once

#include <random>

#include "c2ring/divisibility.hpp"
#include "c2ring/rational.hpp"
#include "c2ring/ring.hpp"

namespace c2ring::testutil {

inline BasisElement random_basis(std::mt19937& rng, std::int64_t window) {
    std::uniform_int_distribution<int> tag(0, 3);
    std::uniform_int_distribution<std::int64_t> idx(1, window);
    std::uniform_int_distribution<std::int64_t> omega_idx(-window / 2, window / 2);
    switch (tag(rng)) {
        case 0: return BasisElement::unit();
        case 1: return BasisElement::omega(omega_idx(rng));
        case 2: return BasisElement::rho_pow(idx(rng));
        default: return BasisElement::x_class(idx(rng));
    }
}

inline RingElement random_element(std::mt19937& rng, std::int64_t window, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-9, 9);
    RingElement e;
    for (int t = nterms(rng); t > 0; --t) e.add_term(random_basis(rng, window), coeff(rng));
    return e;
}

inline RationalElement random_rational_element(std::mt19937& rng, std::int64_t window,
                                               int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 8);
    RationalElement e;
    for (int t = nterms(rng); t > 0; --t)
        e.add_term(random_basis(rng, window), Rational(num(rng), den(rng)));
    return e;
}

// Restores the true n-table no matter how a test exits.
struct NOverrideGuard {
    ~NOverrideGuard() { set_n_override({}); }
};

}  // namespace c2ring::testutil
