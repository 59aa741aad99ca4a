#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "quasiord/polyhedron.hpp"
#include "quasiord/simplex.hpp"
#include "quasiord/weights.hpp"
#include "test_util.hpp"

using namespace quasiord;
using testutil::Rng;

namespace {

const Signature kX3Z{3, 0};

SparsePolynomial mono(Signature sig, std::vector<int> base, int main, Rat c = Rat(1)) {
    return SparsePolynomial::monomial(sig, Exponents{std::move(base), {}, main}, c);
}

// Weight on k[[x1,x2,x3]] with W(x1)=(1,0), W(x2)=(0,1), W(x3)=(2,1).
WeightMap planar_weight() {
    return WeightMap(2, {FracVector{Rat(1), Rat(0)}, FracVector{Rat(0), Rat(1)},
                         FracVector{Rat(2), Rat(1)}});
}

SparsePolynomial example_24() {
    return mono(kX3Z, {0, 0, 0}, 2) + mono(kX3Z, {1, 3, 0}, 1, Rat(2)) +
           mono(kX3Z, {2, 6, 0}, 0) + mono(kX3Z, {3, 0, 1}, 0) + mono(kX3Z, {0, 2, 3}, 0);
}

FracVector fv(std::vector<Rat> v) { return v; }

}  // namespace

TEST_CASE("weight evaluation") {
    WeightMap w = planar_weight();
    Exponents x3 = zero_exponents(kX3Z);
    x3.base[2] = 1;
    CHECK(w.weight_of(x3) == fv({Rat(2), Rat(1)}));

    WeightMap id = WeightMap::identity(3);
    Exponents e = zero_exponents(kX3Z);
    e.base = {4, 0, 7};
    CHECK(id.weight_of(e) == fv({Rat(4), Rat(0), Rat(7)}));

    // (Id3 | (1/2,1/2,1/2)) applied to u0^2
    WeightMap wst = WeightMap::identity(3).extend(fv({Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
    Exponents u2{std::vector<int>{0, 0, 0}, std::vector<int>{2}, 0};
    CHECK(wst.weight_of(u2) == fv({Rat(1), Rat(1), Rat(1)}));

    CHECK_THROWS_AS(WeightMap::identity(2).extend(fv({Rat(0), Rat(0)})), ZeroWeight);
}

TEST_CASE("product order comparison") {
    CHECK(product_compare(fv({Rat(1), Rat(3)}), fv({Rat(5, 2), Rat(1, 2)})) == Cmp::Incomparable);
    CHECK(product_compare(fv({Rat(1), Rat(3)}), fv({Rat(1), Rat(3)})) == Cmp::Equal);
    CHECK(product_compare(fv({Rat(3), Rat(5, 2)}), fv({Rat(1), Rat(3)})) == Cmp::Incomparable);
    CHECK(product_compare(fv({Rat(3), Rat(5, 2)}), fv({Rat(5, 2), Rat(1, 2)})) == Cmp::Greater);
    CHECK(product_compare(fv({Rat(1), Rat(1)}), fv({Rat(2), Rat(2)})) == Cmp::Less);
}

TEST_CASE("vertices of hull plus orthant") {
    auto verts = polyhedron_vertices({fv({Rat(1), Rat(2)}), fv({Rat(2), Rat(1)}), fv({Rat(2), Rat(2)})});
    CHECK(verts == std::vector<FracVector>{fv({Rat(1), Rat(2)}), fv({Rat(2), Rat(1)})});

    verts = polyhedron_vertices({fv({Rat(1), Rat(3)}), fv({Rat(5, 2), Rat(1, 2)}), fv({Rat(3), Rat(5, 2)})});
    CHECK(verts == std::vector<FracVector>{fv({Rat(1), Rat(3)}), fv({Rat(5, 2), Rat(1, 2)})});

    verts = polyhedron_vertices(
        {fv({Rat(0), Rat(4)}), fv({Rat(1), Rat(1)}), fv({Rat(4), Rat(0)}), fv({Rat(2), Rat(2)})});
    CHECK(verts == std::vector<FracVector>{fv({Rat(0), Rat(4)}), fv({Rat(1), Rat(1)}),
                                           fv({Rat(4), Rat(0)})});

    CHECK_THROWS_AS(polyhedron_vertices({}), EmptyInput);
}

TEST_CASE("associated polyhedron of the running example") {
    auto poly = associated_polyhedron(example_24(), planar_weight());
    CHECK(poly.points == std::vector<FracVector>{fv({Rat(1), Rat(3)}), fv({Rat(5, 2), Rat(1, 2)}),
                                                 fv({Rat(3), Rat(5, 2)})});
    CHECK(poly.vertices == std::vector<FracVector>{fv({Rat(1), Rat(3)}), fv({Rat(5, 2), Rat(1, 2)})});

    auto zn = mono(kX3Z, {0, 0, 0}, 4);
    CHECK(associated_polyhedron(zn, planar_weight()).empty());

    Signature sig{1, 0};
    auto cusp = SparsePolynomial::monomial(sig, Exponents{{0}, {}, 2}, Rat(1)) -
                SparsePolynomial::monomial(sig, Exponents{{3}, {}, 0}, Rat(1));
    auto p1 = associated_polyhedron(cusp, WeightMap::identity(1));
    CHECK(p1.vertices == std::vector<FracVector>{fv({Rat(3, 2)})});
}

TEST_CASE("initial forms") {
    // z^2 - x^21 - x^18 u^3 with unit weights on x and u: single vertex 21/2
    Signature sig{2, 0};
    auto f = mono(sig, {0, 0}, 2) - mono(sig, {21, 0}, 0) - mono(sig, {18, 3}, 0);
    WeightMap w(1, {fv({Rat(1)}), fv({Rat(1)})});
    auto form = initial_form(f, w, fv({Rat(21, 2)}));
    CHECK(form.polynomial == f);

    Signature s1{1, 0};
    auto cusp = mono(s1, {0}, 2) - mono(s1, {3}, 0);
    CHECK(initial_form(cusp, WeightMap::identity(1), fv({Rat(3, 2)})).polynomial == cusp);

    auto ex = example_24();
    auto at13 = initial_form(ex, planar_weight(), fv({Rat(1), Rat(3)}));
    auto expect = mono(kX3Z, {0, 0, 0}, 2) + mono(kX3Z, {1, 3, 0}, 1, Rat(2)) +
                  mono(kX3Z, {2, 6, 0}, 0);
    CHECK(at13.polynomial == expect);

    CHECK_THROWS_AS(initial_form(ex, planar_weight(), fv({Rat(3), Rat(5, 2)})), NotAVertex);

    // re-extracting from an initial form is a fixed point
    auto again = initial_form(at13.polynomial, planar_weight(), fv({Rat(1), Rat(3)}));
    CHECK(again.polynomial == at13.polynomial);
}

TEST_CASE("vertex incomparability and hull membership (randomized)") {
    Rng rng(314159);
    for (int trial = 0; trial < 220; ++trial) {
        int c = testutil::uniform(rng, 1, 4);
        int npts = testutil::uniform(rng, 1, 12);
        std::vector<FracVector> pts;
        for (int i = 0; i < npts; ++i) {
            FracVector v(c);
            for (auto& x : v)
                x = Rat(testutil::uniform(rng, 0, 12), testutil::uniform(rng, 1, 4));
            pts.push_back(std::move(v));
        }
        auto verts = polyhedron_vertices(pts);
        REQUIRE(!verts.empty());
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = 0; j < verts.size(); ++j)
                if (i != j)
                    CHECK(product_compare(verts[i], verts[j]) == Cmp::Incomparable);
        for (const auto& p : pts) CHECK(polyhedron_contains(verts, p));
    }
}

TEST_CASE("weighted polyhedron is the image of the unweighted one (randomized)") {
    Rng rng(271828);
    for (int trial = 0; trial < 200; ++trial) {
        int d = testutil::uniform(rng, 1, 3);
        int c = testutil::uniform(rng, 1, 3);
        Signature sig{d, 0};
        int n = testutil::uniform(rng, 2, 4);
        SparsePolynomial f = SparsePolynomial::monomial(sig, Exponents{std::vector<int>(d, 0), {}, n}, Rat(1));
        int terms = testutil::uniform(rng, 1, 6);
        for (int t = 0; t < terms; ++t) {
            Exponents e = zero_exponents(sig);
            for (auto& x : e.base) x = testutil::uniform(rng, 0, 5);
            if (e.total() == 0) continue;
            e.main = testutil::uniform(rng, 0, n - 1);
            f.add_term(std::move(e), testutil::random_nonzero_rational(rng));
        }

        std::vector<FracVector> cols(d);
        for (auto& col : cols) {
            col.assign(c, Rat(0));
            while (is_zero(col))
                for (auto& x : col)
                    x = Rat(testutil::uniform(rng, 0, 4), testutil::uniform(rng, 1, 3));
        }
        WeightMap w(c, cols);

        auto direct = associated_polyhedron(f, w);
        auto base = associated_polyhedron(f, WeightMap::identity(d));
        if (base.empty()) {
            CHECK(direct.empty());
            continue;
        }
        std::vector<FracVector> mapped;
        for (const auto& p : base.points) mapped.push_back(w.apply(p));
        CHECK(polyhedron_vertices(mapped) == direct.vertices);
    }
}
