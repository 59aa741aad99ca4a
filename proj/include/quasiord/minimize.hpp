#pragma once

#include <vector>

#include "quasiord/polyhedron.hpp"
#include "quasiord/polynomial.hpp"
#include "quasiord/tower.hpp"
#include "quasiord/weights.hpp"

namespace quasiord {

// One applied coordinate change. A main shift replaces the main variable z
// by u = z + shift (shift free of the main variable); a base shift replaces
// x_i by x_i + shift (shift in the other base variables, order >= 1).
struct ChangeRecord {
    enum class Kind { MainShift, BaseShift };
    Kind kind;
    int base_index = -1;
    SparsePolynomial shift;
};

// Substitute u = main + h and keep the tower consistent: the top relation
// mentions the open main variable, so its right-hand side shifts along.
SparsePolynomial apply_main_shift(const SparsePolynomial& f, RingTower& tower,
                                  const SparsePolynomial& h);

// Kills the subleading coefficient: h = (1/n) * coeff(main^{n-1}).
// Returns the shift and the rewritten, tower-normalized polynomial.
std::pair<SparsePolynomial, SparsePolynomial> tschirnhausen(const SparsePolynomial& f,
                                                            RingTower& tower);

struct MainMinimizeResult {
    SparsePolynomial shift;  // accumulated u = main + shift
    SparsePolynomial f;
    CharPolyhedron polyhedron;
};

// Tschirnhausen, then a defensive vertex-elimination sweep: a vertex whose
// whole fiber is one constant multiple of the restricted monomial of its
// weight may be removable by a further shift; a candidate shift is accepted
// only if the polyhedron strictly shrinks.
MainMinimizeResult minimize_main(const SparsePolynomial& f, const WeightMap& w, RingTower& tower);

struct BaseMinimizeResult {
    std::vector<ChangeRecord> changes;  // base shifts and interleaved main shifts
    SparsePolynomial f;
    CharPolyhedron polyhedron;
    bool minimized = true;  // false: >= 2 vertices remain (budget or no candidate)
    bool budget_exhausted = false;
};

// First-cycle search over base-coordinate changes x_i -> x_i + c*m. For a
// target vertex, c is solved exactly from the cancellation of the vertex
// fiber; a candidate is applied only if the polyhedron strictly shrinks,
// re-minimizing the main variable after every change.
BaseMinimizeResult minimize_base(const SparsePolynomial& f, int budget);

}  // namespace quasiord
