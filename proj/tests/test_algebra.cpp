#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <vector>

#include "quasiord/discriminant.hpp"
#include "quasiord/lattice.hpp"
#include "quasiord/polynomial.hpp"
#include "quasiord/rational.hpp"
#include "quasiord/tower.hpp"
#include "quasiord/univar.hpp"
#include "test_util.hpp"

using namespace quasiord;
using testutil::Rng;

namespace {

const Signature kXZ{1, 0};        // x, z
const Signature kX2Z{2, 0};       // x1 x2, z
const Signature kX3Z{3, 0};       // x1 x2 x3, z
const Signature kXUZ{1, 1};       // x, u0, z

SparsePolynomial mono(Signature sig, std::vector<int> base, std::vector<int> tower, int main,
                      Rat c = Rat(1)) {
    return SparsePolynomial::monomial(sig, Exponents{std::move(base), std::move(tower), main}, c);
}

// Roots of a monic complex polynomial by Durand-Kerner; test-side oracle only.
std::vector<std::complex<double>> numeric_roots(const std::vector<std::complex<double>>& monic) {
    int n = static_cast<int>(monic.size()) - 1;
    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9);
    z[0] = 1.0;
    for (int i = 1; i < n; ++i) z[i] = z[i - 1] * seed;
    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = 0;
        for (int i = n; i >= 0; --i) v = v * x + monic[i];
        return v;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double shift = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= z[i] - z[j];
            std::complex<double> step = eval(z[i]) / den;
            z[i] -= step;
            shift = std::max(shift, std::abs(step));
        }
        if (shift < 1e-14) break;
    }
    return z;
}

}  // namespace

TEST_CASE("rational canonical form and serialization") {
    CHECK(Rat(2, 4).str() == "1/2");
    CHECK(Rat(-2, -4).str() == "1/2");
    CHECK(Rat(2, -4).str() == "-1/2");
    CHECK(Rat(6, 3).str() == "2");
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat::parse("7/2") == Rat(7, 2));
    CHECK(Rat::parse("-3") == Rat(-3));
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK(Rat(3, 2).pow(3) == Rat(27, 8));
    CHECK(Rat(-8).pow(2) == Rat(64));
}

TEST_CASE("rational exact roots") {
    CHECK(rational_root(Rat(27, 8), 3) == Rat(3, 2));
    CHECK(rational_root(Rat(-27), 3) == Rat(-3));
    CHECK(!rational_root(Rat(2), 2).has_value());
    CHECK(!rational_root(Rat(-4), 2).has_value());
    CHECK(rational_root(Rat(1), 5) == Rat(1));
}

TEST_CASE("polynomial ring laws on random inputs") {
    Rng rng(20240901);
    for (int i = 0; i < 250; ++i) {
        Signature sig{testutil::uniform(rng, 1, 3), testutil::uniform(rng, 0, 2)};
        auto p = testutil::random_polynomial(rng, sig);
        auto q = testutil::random_polynomial(rng, sig);
        auto r = testutil::random_polynomial(rng, sig);
        CHECK((p + q) - q == p);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("substitution") {
    // x2 -> x2 - x1 straightens z^2 + x1^3 + x1^2 x2
    auto f = mono(kX2Z, {0, 0}, {}, 2) + mono(kX2Z, {3, 0}, {}, 0) + mono(kX2Z, {2, 1}, {}, 0);
    auto repl = SparsePolynomial::variable(kX2Z, {VarKind::Base, 1}) -
                SparsePolynomial::variable(kX2Z, {VarKind::Base, 0});
    auto g = f.substitute({VarKind::Base, 1}, repl);
    CHECK(g == mono(kX2Z, {0, 0}, {}, 2) + mono(kX2Z, {2, 1}, {}, 0));

    // identity substitution
    auto idm = SparsePolynomial::variable(kX2Z, {VarKind::Base, 0});
    CHECK(f.substitute({VarKind::Base, 0}, idm) == f);

    // z -> z - x on z^2 + 2zx + x^3
    auto h = mono(kXZ, {0}, {}, 2) + mono(kXZ, {1}, {}, 1, Rat(2)) + mono(kXZ, {3}, {}, 0);
    auto zshift = SparsePolynomial::variable(kXZ, {VarKind::Main, 0}) -
                  SparsePolynomial::variable(kXZ, {VarKind::Base, 0});
    auto hs = h.substitute({VarKind::Main, 0}, zshift);
    CHECK(hs == mono(kXZ, {0}, {}, 2) + mono(kXZ, {3}, {}, 0) - mono(kXZ, {2}, {}, 0));
}

TEST_CASE("weierstrass validation") {
    auto ex24 = mono(kX3Z, {0, 0, 0}, {}, 2) + mono(kX3Z, {1, 3, 0}, {}, 1, Rat(2)) +
                mono(kX3Z, {2, 6, 0}, {}, 0) + mono(kX3Z, {3, 0, 1}, {}, 0) +
                mono(kX3Z, {0, 2, 3}, {}, 0);
    CHECK(weierstrass_validate(ex24) == 2);

    auto z = SparsePolynomial::variable(kXZ, {VarKind::Main, 0});
    CHECK(weierstrass_validate(z) == 1);

    auto bad = mono(kXZ, {1}, {}, 2) + mono(kXZ, {0}, {}, 1);
    CHECK_THROWS_AS(weierstrass_validate(bad), NotWeierstrass);

    auto affine = z + SparsePolynomial::constant(kXZ, Rat(1));
    CHECK_THROWS_AS(weierstrass_validate(affine), NotWeierstrass);
}

TEST_CASE("tower normal form") {
    // u^2 = z + x^3
    RingTower tower(1);
    auto rhs = mono(kXUZ, {0}, {0}, 1) + mono(kXUZ, {3}, {0}, 0);
    tower.push_level(TowerRelation{0, 2, rhs}, FracVector{Rat(3, 2)});

    auto p = mono(kXUZ, {10}, {2}, 0);
    CHECK(normalize_tower(p, tower) == mono(kXUZ, {10}, {0}, 1) + mono(kXUZ, {13}, {0}, 0));

    auto fixed = mono(kXUZ, {2}, {1}, 3) + mono(kXUZ, {0}, {1}, 0);
    CHECK(normalize_tower(fixed, tower) == fixed);

    auto u4 = mono(kXUZ, {0}, {4}, 0);
    auto expect = mono(kXUZ, {0}, {0}, 2) + mono(kXUZ, {3}, {0}, 1, Rat(2)) + mono(kXUZ, {6}, {0}, 0);
    CHECK(normalize_tower(u4, tower) == expect);
}

TEST_CASE("tower normal form: idempotence and quotient equality") {
    Rng rng(77001);
    RingTower tower(1);
    auto rhs = mono(kXUZ, {0}, {0}, 1) + mono(kXUZ, {3}, {0}, 0);
    tower.push_level(TowerRelation{0, 2, rhs}, FracVector{Rat(3, 2)});

    for (int i = 0; i < 200; ++i) {
        auto p = testutil::random_polynomial(rng, kXUZ, 6, 5, 3);
        auto n1 = normalize_tower(p, tower);
        CHECK(normalize_tower(n1, tower) == n1);
        // one manual rewrite step u^2 -> rhs preserves the class
        auto u2 = mono(kXUZ, {0}, {2}, 0);
        auto q = p * u2;
        auto q_rewritten = p * rhs;
        CHECK(normalize_tower(q - q_rewritten, tower).is_zero());
    }
}

TEST_CASE("monomial_of_weight") {
    RingTower tower(1);
    auto rhs = mono(kXUZ, {0}, {0}, 1) + mono(kXUZ, {3}, {0}, 0);
    tower.push_level(TowerRelation{0, 2, rhs}, FracVector{Rat(3, 2)});

    auto m = monomial_of_weight(FracVector{Rat(13, 2)}, tower);
    REQUIRE(m.has_value());
    CHECK(m->base == std::vector<int>{5});
    CHECK(m->tower == std::vector<int>{1});

    auto one = monomial_of_weight(FracVector{Rat(0)}, tower);
    REQUIRE(one.has_value());
    CHECK(one->base == std::vector<int>{0});
    CHECK(one->tower == std::vector<int>{0});

    // integral weight with a deep level: every digit works, so not unique
    RingTower bad(1);
    bad.push_level(TowerRelation{0, 7, rhs}, FracVector{Rat(1)});
    CHECK_THROWS_AS(monomial_of_weight(FracVector{Rat(21)}, bad), AmbiguousWeight);

    // fractional weight outside the lattice positive span
    CHECK(!monomial_of_weight(FracVector{Rat(1, 3)}, tower).has_value());
}

TEST_CASE("monomial_of_weight: uniqueness by brute force") {
    // two-level tower over d=1: u0 with gamma 3/2 (bound 2), u1 with gamma 13/4 (bound 2)
    Signature sig{1, 2};
    RingTower tower(1);
    auto r0 = mono(sig, {0}, {0, 0}, 1) + mono(sig, {3}, {0, 0}, 0);
    tower.push_level(TowerRelation{0, 2, r0}, FracVector{Rat(3, 2)});
    auto r1 = mono(sig, {0}, {0, 0}, 1) + mono(sig, {5}, {1, 0}, 0);
    tower.push_level(TowerRelation{1, 2, r1}, FracVector{Rat(13, 4)});

    // enumerate all restricted monomials x^a u0^b0 u1^b1 with a <= 20
    for (int a = 0; a <= 20; ++a)
        for (int b0 = 0; b0 < 2; ++b0)
            for (int b1 = 0; b1 < 2; ++b1) {
                FracVector w{Rat(a) + Rat(b0) * Rat(3, 2) + Rat(b1) * Rat(13, 4)};
                auto m = monomial_of_weight(w, tower);
                REQUIRE(m.has_value());
                CHECK(m->base == std::vector<int>{a});
                CHECK(m->tower == std::vector<int>{b0, b1});
            }
}

TEST_CASE("discriminant: closed forms") {
    auto f2 = mono(kX2Z, {0, 0}, {}, 2) - mono(kX2Z, {1, 1}, {}, 0);
    CHECK(discriminant_main(f2) == mono(kX2Z, {1, 1}, {}, 0, Rat(4)));

    // z^3 + x2 z^2 + x1^2 against the textbook cubic discriminant
    auto f3 = mono(kX2Z, {0, 0}, {}, 3) + mono(kX2Z, {0, 1}, {}, 2) + mono(kX2Z, {2, 0}, {}, 0);
    auto expect = -mono(kX2Z, {2, 3}, {}, 0, Rat(4)) - mono(kX2Z, {4, 0}, {}, 0, Rat(27));
    CHECK(discriminant_main(f3) == expect);

    auto f1 = SparsePolynomial::variable(kX2Z, {VarKind::Main, 0}) - mono(kX2Z, {1, 0}, {}, 0);
    CHECK(discriminant_main(f1) == SparsePolynomial::constant(kX2Z, Rat(1)));
}

TEST_CASE("discriminant equals squared root differences numerically") {
    Rng rng(5150);
    for (int trial = 0; trial < 60; ++trial) {
        int n = testutil::uniform(rng, 2, 4);
        int d = testutil::uniform(rng, 1, 2);
        Signature sig{d, 0};
        SparsePolynomial f = mono(sig, std::vector<int>(d, 0), {}, n);
        for (int k = 0; k < n; ++k) {
            Exponents e = zero_exponents(sig);
            for (auto& x : e.base) x = testutil::uniform(rng, 0, 2);
            if (e.total() == 0) continue;  // keep f(0,0)=0
            e.main = k;
            f.add_term(std::move(e), testutil::random_rational(rng, 3, 2));
        }
        SparsePolynomial disc = discriminant_main(f);

        std::vector<Rat> pt(d);
        for (auto& x : pt) x = testutil::random_nonzero_rational(rng, 5, 3);
        std::vector<std::complex<double>> coeffs(n + 1);
        for (int k = 0; k <= n; ++k)
            coeffs[k] = f.coefficient_of_main(k).eval(pt, {}, Rat(0)).to_double();
        auto roots = numeric_roots(coeffs);
        std::complex<double> prod = 1.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                auto diff = roots[i] - roots[j];
                prod *= diff * diff;
            }
        double expect = disc.eval(pt, {}, Rat(0)).to_double();
        double err = std::abs(prod - std::complex<double>(expect, 0));
        double scale = std::max(1.0, std::abs(expect));
        CHECK(err / scale < 1e-6);
    }
}

TEST_CASE("exact division undoes multiplication") {
    Rng rng(991);
    for (int i = 0; i < 200; ++i) {
        Signature sig{testutil::uniform(rng, 1, 3), 0};
        auto p = testutil::random_polynomial(rng, sig, 5, 3, 2);
        auto q = testutil::random_polynomial(rng, sig, 4, 3, 2);
        if (q.is_zero()) continue;
        CHECK(exact_divide(p * q, q) == p);
    }
}

TEST_CASE("dominance test") {
    auto p1 = mono(kX2Z, {1, 1}, {}, 0, Rat(4));
    CHECK(dominance_test(p1) == std::vector<int>{1, 1});

    auto p2 = -mono(kX2Z, {2, 3}, {}, 0, Rat(4)) - mono(kX2Z, {4, 0}, {}, 0, Rat(27));
    CHECK(!dominance_test(p2).has_value());

    auto p3 = mono(kX2Z, {2, 0}, {}, 0) + mono(kX2Z, {2, 1}, {}, 0);
    CHECK(dominance_test(p3) == std::vector<int>{2, 0});

    CHECK_THROWS_AS(dominance_test(SparsePolynomial::zero(kX2Z)), ZeroPolynomial);
}

TEST_CASE("dominance test: exhaustive exponent scan agreement") {
    Rng rng(4242);
    for (int i = 0; i < 200; ++i) {
        Signature sig{2, 0};
        auto p = testutil::random_polynomial(rng, sig, 5, 4, 0);
        if (p.is_zero()) continue;
        auto d = dominance_test(p);
        // brute force: a dominant exponent is a support point below all others
        std::optional<std::vector<int>> expect;
        for (const auto& [e, c] : p.terms()) {
            bool ok = true;
            for (const auto& [e2, c2] : p.terms())
                for (size_t k = 0; k < e.base.size(); ++k)
                    if (e.base[k] > e2.base[k]) ok = false;
            if (ok) expect = e.base;
        }
        CHECK(d == expect);
    }
}

TEST_CASE("lattice membership") {
    CHECK(!lattice_membership(FracVector{Rat(13, 6), Rat(5, 2), Rat(7, 6)},
                              {FracVector{Rat(1, 2), Rat(1, 2), Rat(1, 2)}}));
    CHECK(lattice_membership(FracVector{Rat(3), Rat(-2), Rat(11)}, {}));
    CHECK(lattice_membership(FracVector{Rat(7, 2)}, {FracVector{Rat(3, 2)}}));
    CHECK(!lattice_membership(FracVector{Rat(13, 4)}, {FracVector{Rat(3, 2)}}));
}

TEST_CASE("lattice indices") {
    CHECK(lattice_indices({FracVector{Rat(1, 2), Rat(1, 2), Rat(1, 2)}}) == std::vector<int>{2});
    CHECK_THROWS_AS(lattice_indices({FracVector{Rat(2), Rat(3), Rat(1)}}), DegenerateLattice);
    CHECK(lattice_indices({FracVector{Rat(1, 2), Rat(1, 2), Rat(1, 2)},
                           FracVector{Rat(13, 6), Rat(5, 2), Rat(7, 6)}}) ==
          std::vector<int>{2, 3});
    CHECK(lattice_indices({FracVector{Rat(3, 2)}, FracVector{Rat(13, 4)}}) ==
          std::vector<int>{2, 2});
}

TEST_CASE("univariate helpers") {
    using namespace univar;
    // (t-1)^2 detected as a power of a single root
    Poly p{Rat(1), Rat(-2), Rat(1)};
    CHECK(single_root_of_power(p) == Rat(1));
    // (t-1)(t-4): two roots, not a pure power
    Poly q{Rat(4), Rat(-5), Rat(1)};
    CHECK(!single_root_of_power(q).has_value());
    auto roots = rational_roots(q);
    CHECK(roots == std::vector<Rat>{Rat(1), Rat(4)});
    CHECK(multiplicity(mul(p, q), Rat(1)) == 3);
    // irrational pair has no rational roots
    Poly irr{Rat(-2), Rat(0), Rat(1)};
    CHECK(rational_roots(irr).empty());
}
