#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "quasiord/analysis.hpp"
#include "quasiord/extension.hpp"
#include "quasiord/kappa.hpp"

namespace quasiord {

// Truncated fractional-power-series root. Exponents are stored in the
// s-scale (x_i = s_i^n, so an s-exponent M means the x-exponent M/n); the
// truncation bound is graded on |M|_1 in the same scale.
struct RootSeries {
    int n = 1;
    int bound = 0;
    std::map<std::vector<int>, Elem> terms;
    std::shared_ptr<ExtensionTower> tower;
};

// Root-of-unity choices and the resulting initial coefficients c_0..c_{g-1}
// (c_t^{n_{t+1}} = rho_t * c^{b(t)}), all over one tower.
struct BranchContext {
    std::shared_ptr<ExtensionTower> tower;
    std::vector<int> eta;        // eta[i] in [0, n_{i+1})
    std::vector<Elem> c;
    std::vector<Elem> c_inv;
};

BranchContext initial_coefficients(const CycleState& state, const std::vector<int>& eta);

// All prod(n_i) branches over a single shared tower.
std::vector<BranchContext> all_branch_contexts(const CycleState& state);

// Solves the parametrization equations coefficient by coefficient (graded in
// the offset against the leading exponent, lowest tower level first at each
// grade) and returns the root of the shift-restored input in the main
// variable, truncated at graded s-degree `bound`.
RootSeries expand_root(const CycleState& state, const BranchContext& branch, int bound);
RootSeries expand_root(const CycleState& state, const std::vector<int>& eta, int bound);

// Default truncation 3 n |lambda_g|_1 in the s-scale.
int default_root_bound(const CycleState& state);

struct ResidualReport {
    bool pass = false;
    std::optional<std::vector<int>> offending;  // lowest surviving s-exponent
};

// Substitutes the series into f (with x_i = s_i^n) and passes iff every
// surviving term has graded s-degree beyond the bound.
ResidualReport verify_root(const SparsePolynomial& f, const RootSeries& zeta, int bound);

// The unique product-order-minimal exponent of zeta1 - zeta2, as an x-scale
// rational vector; NoDominantTerm if the difference has no least exponent.
FracVector root_difference_valuation(const RootSeries& zeta1, const RootSeries& zeta2);

// Whether prod over all branches of (z - zeta_b) reproduces the analyzed
// polynomial up to the truncation bound.
bool branch_product_matches(const CycleState& state, int bound);

}  // namespace quasiord
