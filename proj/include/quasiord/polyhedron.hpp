#pragma once

#include <vector>

#include "quasiord/fracvec.hpp"
#include "quasiord/polynomial.hpp"
#include "quasiord/weights.hpp"

namespace quasiord {

// The weighted polyhedron conv(S) + Q^c_{>=0} attached to a Weierstrass
// polynomial: S is the finite set of points W(a,b)/(n - m) over the terms
// x^a u^b main^m with m < n. Only the generating points and the vertex set
// are materialized.
struct CharPolyhedron {
    std::vector<FracVector> points;    // deduplicated, lex-sorted
    std::vector<FracVector> vertices;  // pairwise incomparable, lex-sorted

    bool empty() const { return points.empty(); }
};

// Vertices of conv(points) + Q^c_{>=0}: discard product-dominating points,
// then keep exactly those survivors that fail the exact hull-membership test
// against the other survivors.
std::vector<FracVector> polyhedron_vertices(const std::vector<FracVector>& points);

CharPolyhedron associated_polyhedron(const SparsePolynomial& f, const WeightMap& w);

// Membership of p in conv(gens) + Q^c_{>=0}.
bool polyhedron_contains(const std::vector<FracVector>& gens, const FracVector& p);

// Strict inclusion of polyhedra given by their vertex sets.
bool strictly_smaller(const CharPolyhedron& smaller, const CharPolyhedron& larger);

struct InitialForm {
    FracVector vertex;
    SparsePolynomial polynomial;  // main^n plus exactly the fiber of the vertex
};

InitialForm initial_form(const SparsePolynomial& f, const WeightMap& w, const FracVector& v);

}  // namespace quasiord
