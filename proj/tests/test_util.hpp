#pragma once

#include <random>

#include "quasiord/polynomial.hpp"

namespace quasiord::testutil {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rat random_rational(Rng& rng, int num_range = 9, int den_range = 4) {
    int num = uniform(rng, -num_range, num_range);
    int den = uniform(rng, 1, den_range);
    return Rat(num, den);
}

inline Rat random_nonzero_rational(Rng& rng, int num_range = 9, int den_range = 4) {
    Rat r = random_rational(rng, num_range, den_range);
    while (r.is_zero()) r = random_rational(rng, num_range, den_range);
    return r;
}

inline SparsePolynomial random_polynomial(Rng& rng, Signature sig, int max_terms = 6,
                                          int max_exp = 4, int max_main = 3) {
    SparsePolynomial p(sig);
    int terms = uniform(rng, 0, max_terms);
    for (int t = 0; t < terms; ++t) {
        Exponents e = zero_exponents(sig);
        for (auto& x : e.base) x = uniform(rng, 0, max_exp);
        for (auto& x : e.tower) x = uniform(rng, 0, max_exp);
        e.main = uniform(rng, 0, max_main);
        p.add_term(std::move(e), random_rational(rng));
    }
    return p;
}

}  // namespace quasiord::testutil
