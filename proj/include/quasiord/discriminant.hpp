#pragma once

#include <optional>
#include <vector>

#include "quasiord/polynomial.hpp"

namespace quasiord {

// Exact quotient p / d for a known-divisible pair (leading-term peeling in
// the canonical term order). Throws if d does not divide p.
SparsePolynomial exact_divide(const SparsePolynomial& p, const SparsePolynomial& d);

// Partial derivative with respect to the main variable.
SparsePolynomial derivative_main(const SparsePolynomial& f);

// Resultant of f and g with respect to the main variable, via the Sylvester
// matrix and fraction-free (Bareiss) elimination over the coefficient ring.
SparsePolynomial resultant_main(const SparsePolynomial& f, const SparsePolynomial& g);

// Discriminant (-1)^{n(n-1)/2} Res(f, df/dmain) of a monic f of degree n.
// The sign convention is fixed here; downstream only monomial dominance of
// the result matters.
SparsePolynomial discriminant_main(const SparsePolynomial& f);

// delta such that p = x^delta * (unit), i.e. the exponent of a term dividing
// every other term; nullopt when the support has no least element.
std::optional<std::vector<int>> dominance_test(const SparsePolynomial& p);

}  // namespace quasiord
