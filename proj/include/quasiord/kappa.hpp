#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quasiord/minimize.hpp"
#include "quasiord/polyhedron.hpp"
#include "quasiord/polynomial.hpp"
#include "quasiord/tower.hpp"
#include "quasiord/weights.hpp"

namespace quasiord {

// One factor (main^power - rho * x^a u^b)^multiplicity of a binomial initial
// form. The monomial is the restricted representative of weight power * v.
struct BinomialPower {
    int power = 0;
    Rat rho;
    Exponents mono;
    int multiplicity = 0;
};

struct Diagnostic {
    std::string code;    // "star0", "star1", "star2", "multi_vertex", ...
    std::string detail;
};

enum class Terminal { Infinity, MinusOne };

// Everything the cycle loop accumulates; terminal states keep it whole so
// the derived data (roots, semigroup, deformation) can be read off.
struct CycleState {
    int d = 0;
    int n = 0;                       // input degree
    RingTower tower;                 // depth g on success
    WeightMap weights;               // (Id_d | v(1) | ... | v(g))
    SparsePolynomial f;              // current transform, restricted normal form
    std::vector<int> indices;        // n_1..n_g
    std::vector<int> degrees;        // e_0 = n > e_1 > ... > e_g
    std::vector<Rat> rhos;           // rho_1..rho_g
    std::vector<Exponents> monos;    // binomial monomials, signature (d, i-1) at cycle i
    std::vector<SparsePolynomial> shifts;  // h_0..; u_t = z_t + h_t
    std::vector<ChangeRecord> base_changes;
    SparsePolynomial minimized_input;  // input after the first cycle's changes
    bool base_budget_exhausted = false;
    bool completed = false;  // true when the construction ended with Infinity

    CycleState() : tower(0) {}
};

struct KappaResult {
    std::vector<FracVector> vertices;
    Terminal terminal = Terminal::MinusOne;
    std::vector<Diagnostic> diagnostics;
    CycleState state;

    bool quasi_ordinary() const { return terminal == Terminal::Infinity; }
};

struct KappaConfig {
    int base_budget = 16;
};

// Factors the initial form at the unique vertex into binomial powers:
// substitute u_j -> x^{gamma_{j+1}}, read the segment of the Newton
// polyhedron, analyze the univariate edge polynomial P over Q, and map each
// factor's monomial back through monomial_of_weight.
std::vector<BinomialPower> factor_initial_form(const InitialForm& form, const WeightMap& w,
                                               const RingTower& tower);

struct StarCheck {
    bool pass = true;
    Diagnostic failure;
};

// Condition (*): exactly one binomial; strict product growth of the vertex
// against n_t * v(t) (vacuous on the first cycle); vertex outside the
// accumulated lattice Z^d + Z v(1) + ... (on the first cycle: outside Z^d).
StarCheck star_check(const FracVector& v_next, const CycleState& state,
                     const std::vector<BinomialPower>& factors);

// Representative whose initial form at the vertex is exactly the expanded
// binomial product: f* + normal_form(f_tilde - f*).
SparsePolynomial canonical_representative(const SparsePolynomial& f_tilde,
                                          const CycleState& state,
                                          const std::vector<BinomialPower>& factors);

WeightMap extend_weight(const WeightMap& w, const FracVector& v);

KappaResult run_construction(const SparsePolynomial& f, const KappaConfig& config = {});

// Approximate roots: each tower variable unfolded through the relations and
// shifts into a monic polynomial in (x, z) of degree n_1*...*n_i.
std::vector<SparsePolynomial> unfold_to_base(const CycleState& state);

}  // namespace quasiord
