#pragma once

#include <optional>
#include <vector>

#include "quasiord/rational.hpp"

namespace quasiord {

// Dense univariate polynomial over Q, coefficients by ascending degree.
// Small helper layer for factor analysis of initial forms and for solving
// cancellation conditions during coordinate changes.
namespace univar {

using Poly = std::vector<Rat>;

void trim(Poly& p);
int degree(const Poly& p);  // -1 for zero
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly derivative(const Poly& p);
Rat eval(const Poly& p, const Rat& x);

// Quotient and remainder; the divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic gcd.
Poly gcd(Poly a, Poly b);

// All rational roots, each listed once (no multiplicities).
std::vector<Rat> rational_roots(const Poly& p);

// Multiplicity of r as a root of p.
int multiplicity(Poly p, const Rat& r);

// If p = lc * (t - r)^deg for a single rational r, returns r.
std::optional<Rat> single_root_of_power(const Poly& p);

}  // namespace univar
}  // namespace quasiord
