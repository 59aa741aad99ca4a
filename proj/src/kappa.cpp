#include "quasiord/kappa.hpp"

#include <algorithm>
#include <utility>

#include "quasiord/lattice.hpp"
#include "quasiord/univar.hpp"

namespace quasiord {

std::vector<BinomialPower> factor_initial_form(const InitialForm& form, const WeightMap&,
                                               const RingTower& tower) {
    const SparsePolynomial& big = form.polynomial;
    const FracVector& v = form.vertex;
    const int n = big.degree_in_main();
    const int d = tower.base_dim();

    // Substitute u_j -> x^{gamma_{j+1}}: exponents become points of the
    // lattice Z^d + sum Z gamma_j, tracked as rational vectors.
    std::map<std::pair<FracVector, int>, Rat> graded;
    for (const auto& [e, c] : big.terms()) {
        FracVector wt(d, Rat(0));
        for (int i = 0; i < d; ++i) wt[i] = Rat(e.base[i]);
        for (size_t j = 0; j < e.tower.size(); ++j)
            if (e.tower[j] > 0) wt = wt + Rat(e.tower[j]) * tower.gamma(static_cast<int>(j));
        graded[{std::move(wt), e.main}] += c;
    }

    int low = n;
    for (const auto& [key, c] : graded)
        if (!c.is_zero()) low = std::min(low, key.second);
    if (low > 0)
        throw NotBinomialForm(
            "initial form is divisible by the main variable; no binomial factorization");

    // Primitive segment direction: smallest step c with c | n and c*v in the
    // lattice; the edge polynomial has degree mu = n / c.
    int step = 0;
    for (int c = 1; c <= n; ++c) {
        if (n % c != 0) continue;
        if (lattice_membership(Rat(c) * v, tower.gammas())) { step = c; break; }
    }
    if (step == 0)
        throw NotBinomialForm("vertex weight is not reachable in the monomial lattice");
    const int mu = n / step;

    univar::Poly edge(mu + 1, Rat(0));
    for (const auto& [key, c] : graded) {
        if (c.is_zero()) continue;
        const auto& [wt, m] = key;
        if (m % step != 0)
            throw NotBinomialForm("initial form term off the edge lattice");
        int j = m / step;
        FracVector expect = Rat(mu - j) * (Rat(step) * v);
        if (!(wt == expect))
            throw NotBinomialForm("initial form term off the vertex segment");
        edge[j] += c;
    }

    FracVector mono_weight = Rat(step) * v;
    auto mono = monomial_of_weight(mono_weight, tower);  // may raise AmbiguousWeight
    if (!mono)
        throw NotBinomialForm("binomial monomial of weight " + to_string(mono_weight) +
                              " is not representable");

    if (auto r = univar::single_root_of_power(edge))
        return {BinomialPower{step, *r, *mono, mu}};

    std::vector<BinomialPower> factors;
    univar::Poly rest = edge;
    for (const Rat& r : univar::rational_roots(edge)) {
        int mult = univar::multiplicity(edge, r);
        factors.push_back(BinomialPower{step, r, *mono, mult});
        univar::Poly lin{-r, Rat(1)};
        for (int k = 0; k < mult; ++k) rest = univar::divmod(rest, lin).first;
    }
    if (univar::degree(rest) > 0)
        throw IrrationalRoots("edge polynomial has irrational roots (at least " +
                              std::to_string(factors.size() + 2) +
                              " distinct binomial factors over an algebraic closure)");
    return factors;
}

StarCheck star_check(const FracVector& v_next, const CycleState& state,
                     const std::vector<BinomialPower>& factors) {
    if (factors.size() != 1)
        return {false, {"star0", "initial form splits into " + std::to_string(factors.size()) +
                                     " distinct binomials"}};
    if (!state.indices.empty()) {
        FracVector bound = Rat(state.indices.back()) * state.tower.gammas().back();
        if (!product_gt(v_next, bound))
            return {false,
                    {"star1", "vertex " + to_string(v_next) + " does not strictly dominate " +
                                  to_string(bound)}};
    }
    if (lattice_membership(v_next, state.tower.gammas()))
        return {false, {"star2", "vertex " + to_string(v_next) +
                                     " lies in the accumulated exponent lattice"}};
    return {true, {}};
}

SparsePolynomial canonical_representative(const SparsePolynomial& f_tilde,
                                          const CycleState& state,
                                          const std::vector<BinomialPower>& factors) {
    const Signature sig = f_tilde.signature();
    SparsePolynomial fstar = SparsePolynomial::constant(sig, Rat(1));
    for (const auto& bp : factors) {
        Exponents lead = zero_exponents(sig);
        lead.main = bp.power;
        SparsePolynomial binom = SparsePolynomial::monomial(sig, lead, Rat(1)) -
                                 SparsePolynomial::monomial(sig, bp.mono, bp.rho);
        fstar = fstar * binom.pow(bp.multiplicity);
    }
    return fstar + normalize_tower(f_tilde - fstar, state.tower);
}

WeightMap extend_weight(const WeightMap& w, const FracVector& v) { return w.extend(v); }

namespace {

SparsePolynomial reindex_main_to_tower(const SparsePolynomial& p, Signature new_sig) {
    SparsePolynomial r(new_sig);
    const int slot = new_sig.tower - 1;
    for (const auto& [e, c] : p.terms()) {
        Exponents q = zero_exponents(new_sig);
        std::copy(e.base.begin(), e.base.end(), q.base.begin());
        std::copy(e.tower.begin(), e.tower.end(), q.tower.begin());
        q.tower[slot] = e.main;
        r.add_term(std::move(q), c);
    }
    return r;
}

}  // namespace

KappaResult run_construction(const SparsePolynomial& f, const KappaConfig& config) {
    if (f.signature().tower != 0)
        throw SignatureMismatch("run_construction expects a polynomial in (x, z)");
    KappaResult out;
    CycleState& st = out.state;
    st.d = f.signature().base;
    st.n = weierstrass_validate(f);
    st.tower = RingTower(st.d);
    st.weights = WeightMap::identity(st.d);
    st.degrees = {st.n};
    st.f = f;
    st.minimized_input = f;

    auto fail = [&](std::string code, std::string detail) -> KappaResult& {
        out.terminal = Terminal::MinusOne;
        out.diagnostics.push_back({std::move(code), std::move(detail)});
        return out;
    };

    for (int cycle = 0;; ++cycle) {
        if (cycle > 64) throw NotQuasiOrdinaryState("cycle bound exceeded");
        try {
            MainMinimizeResult mm = minimize_main(st.f, st.weights, st.tower);
            SparsePolynomial h = mm.shift;
            st.f = mm.f;
            CharPolyhedron poly = mm.polyhedron;

            if (cycle == 0) {
                if (poly.vertices.size() >= 2) {
                    BaseMinimizeResult bm = minimize_base(st.f, config.base_budget);
                    for (const auto& rec : bm.changes) {
                        if (rec.kind == ChangeRecord::Kind::BaseShift) {
                            VarRef xi{VarKind::Base, rec.base_index};
                            h = h.substitute(
                                xi, SparsePolynomial::variable(h.signature(), xi) + rec.shift);
                        } else {
                            h += rec.shift;
                        }
                    }
                    st.base_changes = bm.changes;
                    st.f = bm.f;
                    poly = bm.polyhedron;
                    st.base_budget_exhausted = bm.budget_exhausted;
                    if (!bm.minimized) {
                        st.shifts.push_back(h);
                        st.minimized_input = st.f;
                        return fail(bm.budget_exhausted ? "base_budget" : "multi_vertex",
                                    bm.budget_exhausted
                                        ? "base-change budget exhausted with " +
                                              std::to_string(poly.vertices.size()) +
                                              " vertices remaining"
                                        : "no base change eliminates any of the " +
                                              std::to_string(poly.vertices.size()) +
                                              " polyhedron vertices");
                    }
                }
                st.minimized_input = st.f;
            }
            st.shifts.push_back(h);

            if (poly.empty()) {
                out.terminal = Terminal::Infinity;
                st.completed = true;
                int e = st.degrees.back();
                if (e >= 2)
                    out.diagnostics.push_back(
                        {"reducible",
                         "transform of degree " + std::to_string(e) +
                             " has an empty polyhedron (perfect power); the input is reducible"});
                return out;
            }
            if (poly.vertices.size() >= 2)
                return fail("multi_vertex", "minimized polyhedron has " +
                                                std::to_string(poly.vertices.size()) +
                                                " vertices");

            const FracVector v = poly.vertices.front();
            InitialForm form = initial_form(st.f, st.weights, v);
            std::vector<BinomialPower> factors = factor_initial_form(form, st.weights, st.tower);
            StarCheck sc = star_check(v, st, factors);
            if (!sc.pass) return fail(sc.failure.code, sc.failure.detail);

            const BinomialPower bp = factors.front();
            if (bp.power <= 1)
                return fail("eliminable_vertex",
                            "edge step 1: the vertex could still be eliminated by a shift");

            SparsePolynomial frep = canonical_representative(st.f, st, factors);

            out.vertices.push_back(v);
            Signature new_sig{st.d, st.tower.depth() + 1};
            RingTower grown(st.d);
            for (int lvl = 0; lvl < st.tower.depth(); ++lvl)
                grown.push_level(TowerRelation{lvl, st.tower.bound(lvl),
                                               reindex_main_to_tower(st.tower.relation(lvl).rhs,
                                                                     new_sig)},
                                 st.tower.gamma(lvl));
            Exponents mono_wide = zero_exponents(new_sig);
            std::copy(bp.mono.base.begin(), bp.mono.base.end(), mono_wide.base.begin());
            std::copy(bp.mono.tower.begin(), bp.mono.tower.end(), mono_wide.tower.begin());
            SparsePolynomial rhs =
                SparsePolynomial::variable(new_sig, {VarKind::Main, 0}) +
                SparsePolynomial::monomial(new_sig, mono_wide, bp.rho);
            grown.push_level(TowerRelation{st.tower.depth(), bp.power, std::move(rhs)}, v);

            st.tower = std::move(grown);
            st.weights = extend_weight(st.weights, v);
            st.indices.push_back(bp.power);
            st.rhos.push_back(bp.rho);
            st.monos.push_back(bp.mono);
            st.degrees.push_back(bp.multiplicity);

            st.f = normalize_tower(reindex_main_to_tower(frep, new_sig), st.tower);
            if (st.f.degree_in_main() != bp.multiplicity)
                return fail("degree_mismatch",
                            "transform degree " + std::to_string(st.f.degree_in_main()) +
                                " does not match the factor multiplicity " +
                                std::to_string(bp.multiplicity));
        } catch (const NotQuasiOrdinaryState&) {
            throw;
        } catch (const Error& e) {
            return fail(e.code(), e.what());
        }
    }
}

namespace {

// Expand a tower-ring element into (x, z) by substituting each u_i with its
// unfolded polynomial.
SparsePolynomial unfold_element(const SparsePolynomial& p,
                                const std::vector<SparsePolynomial>& q, Signature base_sig) {
    SparsePolynomial r(base_sig);
    for (const auto& [e, c] : p.terms()) {
        Exponents xe = zero_exponents(base_sig);
        xe.base = e.base;
        xe.main = e.main;
        SparsePolynomial term = SparsePolynomial::monomial(base_sig, std::move(xe), c);
        for (size_t j = 0; j < e.tower.size(); ++j)
            if (e.tower[j] > 0) term = term * q[j].pow(e.tower[j]);
        r += term;
    }
    return r;
}

}  // namespace

std::vector<SparsePolynomial> unfold_to_base(const CycleState& state) {
    const Signature sig{state.d, 0};
    std::vector<SparsePolynomial> q;
    q.push_back(SparsePolynomial::variable(sig, {VarKind::Main, 0}) + state.shifts.at(0));
    for (int i = 1; i < state.tower.depth(); ++i) {
        Signature mono_sig{state.d, static_cast<int>(state.monos[i - 1].tower.size())};
        SparsePolynomial mono_unfolded = unfold_element(
            SparsePolynomial::monomial(mono_sig, state.monos[i - 1], state.rhos[i - 1]), q, sig);
        SparsePolynomial h_unfolded = unfold_element(state.shifts.at(i), q, sig);
        q.push_back(q.back().pow(state.indices[i - 1]) - mono_unfolded + h_unfolded);
    }
    return q;
}

}  // namespace quasiord
