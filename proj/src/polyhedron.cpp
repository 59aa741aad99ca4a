#include "quasiord/polyhedron.hpp"

#include <algorithm>

#include "quasiord/simplex.hpp"

namespace quasiord {

std::vector<FracVector> polyhedron_vertices(const std::vector<FracVector>& points) {
    if (points.empty()) throw EmptyInput("polyhedron_vertices: no points");

    std::vector<FracVector> uniq = points;
    std::sort(uniq.begin(), uniq.end(), lex_less);
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

    // A point dominating another can never be a vertex.
    std::vector<FracVector> survivors;
    for (const auto& p : uniq) {
        bool dominated = false;
        for (const auto& q : uniq) {
            if (&p == &q) continue;
            if (product_compare(p, q) == Cmp::Greater) { dominated = true; break; }
        }
        if (!dominated) survivors.push_back(p);
    }

    std::vector<FracVector> verts;
    for (size_t i = 0; i < survivors.size(); ++i) {
        std::vector<FracVector> others;
        others.reserve(survivors.size() - 1);
        for (size_t j = 0; j < survivors.size(); ++j)
            if (j != i) others.push_back(survivors[j]);
        if (others.empty() || !in_hull_plus_orthant(survivors[i], others))
            verts.push_back(survivors[i]);
    }
    return verts;  // already lex-sorted
}

CharPolyhedron associated_polyhedron(const SparsePolynomial& f, const WeightMap& w) {
    int n = weierstrass_validate(f);
    CharPolyhedron poly;
    for (const auto& [e, c] : f.terms()) {
        if (e.main >= n) continue;
        FracVector v = w.weight_of(e);
        Rat inv = Rat(1, n - e.main);
        for (auto& x : v) x *= inv;
        poly.points.push_back(std::move(v));
    }
    if (poly.points.empty()) return poly;
    std::sort(poly.points.begin(), poly.points.end(), lex_less);
    poly.points.erase(std::unique(poly.points.begin(), poly.points.end()), poly.points.end());
    poly.vertices = polyhedron_vertices(poly.points);
    return poly;
}

bool polyhedron_contains(const std::vector<FracVector>& gens, const FracVector& p) {
    return in_hull_plus_orthant(p, gens);
}

bool strictly_smaller(const CharPolyhedron& smaller, const CharPolyhedron& larger) {
    if (smaller.empty()) return !larger.empty();
    if (larger.empty()) return false;
    for (const auto& v : smaller.vertices)
        if (!polyhedron_contains(larger.vertices, v)) return false;
    return smaller.vertices != larger.vertices;
}

InitialForm initial_form(const SparsePolynomial& f, const WeightMap& w, const FracVector& v) {
    int n = weierstrass_validate(f);
    CharPolyhedron poly = associated_polyhedron(f, w);
    if (std::find(poly.vertices.begin(), poly.vertices.end(), v) == poly.vertices.end())
        throw NotAVertex("initial_form: not a vertex of the polyhedron");

    SparsePolynomial form(f.signature());
    for (const auto& [e, c] : f.terms()) {
        if (e.main == n) { form.add_term(e, c); continue; }
        FracVector pt = w.weight_of(e);
        Rat inv = Rat(1, n - e.main);
        for (auto& x : pt) x *= inv;
        if (pt == v) form.add_term(e, c);
    }
    return InitialForm{v, std::move(form)};
}

}  // namespace quasiord
