#include "quasiord/minimize.hpp"

#include <algorithm>
#include <functional>

#include "quasiord/univar.hpp"

namespace quasiord {

namespace {

Rat binomial(int n, int k) {
    Rat r(1);
    for (int i = 0; i < k; ++i) r *= Rat(n - i, i + 1);
    return r;
}

}  // namespace

SparsePolynomial apply_main_shift(const SparsePolynomial& f, RingTower& tower,
                                  const SparsePolynomial& h) {
    if (h.is_zero()) return f;
    if (h.contains({VarKind::Main, 0}))
        throw SignatureMismatch("main shift must not involve the main variable");
    SparsePolynomial repl =
        SparsePolynomial::variable(f.signature(), {VarKind::Main, 0}) - h;
    if (tower.depth() > 0) {
        int top = tower.depth() - 1;
        const SparsePolynomial& rhs = tower.relation(top).rhs;
        if (rhs.contains({VarKind::Main, 0}))
            tower.set_relation_rhs(top, rhs.substitute({VarKind::Main, 0}, repl));
    }
    return normalize_tower(f.substitute({VarKind::Main, 0}, repl), tower);
}

std::pair<SparsePolynomial, SparsePolynomial> tschirnhausen(const SparsePolynomial& f,
                                                            RingTower& tower) {
    int n = weierstrass_validate(f);
    SparsePolynomial sub = f.coefficient_of_main(n - 1);
    if (sub.is_zero()) return {SparsePolynomial::zero(f.signature()), f};
    SparsePolynomial h = Rat(1, n) * sub;
    SparsePolynomial g = apply_main_shift(f, tower, h);
    if (!g.coefficient_of_main(n - 1).is_zero())
        throw NotWeierstrass("tschirnhausen: subleading coefficient survived");
    return {h, g};
}

MainMinimizeResult minimize_main(const SparsePolynomial& f, const WeightMap& w,
                                 RingTower& tower) {
    auto [h, cur] = tschirnhausen(f, tower);
    int n = cur.degree_in_main();
    CharPolyhedron poly = associated_polyhedron(cur, w);

    // Defensive sweep. A no-op whenever Tschirnhausen already gave the
    // minimal polyhedron, which is the common case.
    for (int pass = 0; pass < 32; ++pass) {
        bool progressed = false;
        for (const auto& v : poly.vertices) {
            SparsePolynomial fiber = initial_form(cur, w, v).polynomial;
            Exponents lead = zero_exponents(cur.signature());
            lead.main = n;
            fiber.add_term(lead, Rat(-1));
            if (fiber.term_count() != 1) continue;
            const auto& [fe, fc] = *fiber.terms().begin();
            int drop = n - fe.main;
            if (drop <= 0 || fe.main == n - 1) continue;

            std::optional<Exponents> mv;
            try {
                mv = monomial_of_weight(v, tower);
            } catch (const AmbiguousWeight&) {
                continue;
            }
            if (!mv) continue;
            Exponents scaled = *mv;
            for (auto& x : scaled.base) x *= drop;
            for (auto& x : scaled.tower) x *= drop;
            scaled.main = fe.main;
            if (!(scaled == fe)) continue;  // fiber is not a power of M_v

            // Want binom(n, main)*(-mu)^drop = -fc, i.e. (-mu)^drop = -fc/binom.
            auto root = rational_root(-fc / binomial(n, fe.main), drop);
            if (!root) continue;
            Rat mu = -*root;
            SparsePolynomial shift =
                SparsePolynomial::monomial(cur.signature(), *mv, mu);

            RingTower trial_tower = tower;
            SparsePolynomial trial = apply_main_shift(cur, trial_tower, shift);
            auto [h2, trial2] = tschirnhausen(trial, trial_tower);
            CharPolyhedron trial_poly = associated_polyhedron(trial2, w);
            if (strictly_smaller(trial_poly, poly)) {
                tower = trial_tower;
                cur = trial2;
                poly = trial_poly;
                h += shift + h2;
                progressed = true;
                break;
            }
        }
        if (!progressed) break;
    }
    return {h, cur, poly};
}

namespace {

// Candidate values of c for which x_i -> x_i + c*m wipes every term of f
// sitting exactly on the target vertex: each such term's coefficient becomes
// a univariate polynomial in c; the common rational roots are the candidates.
std::vector<Rat> cancellation_values(const SparsePolynomial& f, int n, int var,
                                     const Exponents& m_exp, const FracVector& target) {
    Signature sig = f.signature();
    Signature wide{sig.base + 1, sig.tower};  // extra slot tracks powers of c
    const int cvar = sig.base;

    SparsePolynomial wide_f = f.extend(wide);
    Exponents cm = zero_exponents(wide);
    std::copy(m_exp.base.begin(), m_exp.base.end(), cm.base.begin());
    cm.base[cvar] = 1;
    SparsePolynomial repl = SparsePolynomial::variable(wide, {VarKind::Base, var}) +
                            SparsePolynomial::monomial(wide, cm, Rat(1));
    SparsePolynomial sub = wide_f.substitute({VarKind::Base, var}, repl);

    // Group by the monomial without the c-slot; keep only the target fiber.
    std::map<Exponents, univar::Poly> conditions;
    for (const auto& [e, coef] : sub.terms()) {
        if (e.main >= n) continue;
        Exponents key = e;
        int cdeg = key.base[cvar];
        key.base[cvar] = 0;
        FracVector pt(sig.base);
        for (int i = 0; i < sig.base; ++i) pt[i] = Rat(key.base[i], n - e.main);
        if (!(pt == target)) continue;
        auto& poly = conditions[key];
        if (static_cast<int>(poly.size()) <= cdeg) poly.resize(cdeg + 1, Rat(0));
        poly[cdeg] += coef;
    }
    if (conditions.empty()) return {};

    univar::Poly common;
    bool first = true;
    for (auto& [key, poly] : conditions) {
        univar::trim(poly);
        if (poly.empty()) continue;
        if (univar::degree(poly) == 0) return {};  // constant: never cancels
        common = first ? poly : univar::gcd(common, poly);
        first = false;
        if (univar::degree(common) == 0) return {};
    }
    if (first) return {};

    std::vector<Rat> out;
    for (const auto& r : univar::rational_roots(common))
        if (!r.is_zero()) out.push_back(r);
    return out;
}

}  // namespace

BaseMinimizeResult minimize_base(const SparsePolynomial& f, int budget) {
    if (f.signature().tower != 0)
        throw SignatureMismatch("minimize_base applies to the first cycle only");
    const int d = f.signature().base;
    const int n = weierstrass_validate(f);
    WeightMap w0 = WeightMap::identity(d);
    RingTower empty(d);

    BaseMinimizeResult res{.changes = {},
                           .f = f,
                           .polyhedron = associated_polyhedron(f, w0),
                           .minimized = true,
                           .budget_exhausted = false};

    // Bound on candidate monomial degrees: the input's total degree.
    int max_deg = 0;
    for (const auto& [e, c] : f.terms()) max_deg = std::max(max_deg, e.total());

    while (res.polyhedron.vertices.size() >= 2) {
        if (budget <= 0) {
            res.minimized = false;
            res.budget_exhausted = true;
            return res;
        }
        bool applied = false;
        for (const auto& target : res.polyhedron.vertices) {
            for (int var = 0; var < d && !applied; ++var) {
                // monomials in the other base variables, degree 1..max_deg
                std::vector<Exponents> monos;
                std::vector<int> stack(d, 0);
                std::function<void(int, int)> enumerate = [&](int pos, int deg) {
                    if (pos == d) {
                        if (deg >= 1) {
                            Exponents e = zero_exponents(f.signature());
                            e.base = stack;
                            monos.push_back(std::move(e));
                        }
                        return;
                    }
                    if (pos == var) { enumerate(pos + 1, deg); return; }
                    for (int k = 0; deg + k <= max_deg; ++k) {
                        stack[pos] = k;
                        enumerate(pos + 1, deg + k);
                    }
                    stack[pos] = 0;
                };
                enumerate(0, 0);

                for (const auto& m : monos) {
                    for (const Rat& c : cancellation_values(res.f, n, var, m, target)) {
                        SparsePolynomial shift =
                            SparsePolynomial::monomial(f.signature(), m, c);
                        SparsePolynomial cand = res.f.substitute(
                            {VarKind::Base, var},
                            SparsePolynomial::variable(f.signature(), {VarKind::Base, var}) +
                                shift);
                        RingTower tmp(d);
                        auto mm = minimize_main(cand, w0, tmp);
                        if (!strictly_smaller(mm.polyhedron, res.polyhedron)) continue;
                        res.changes.push_back(
                            {ChangeRecord::Kind::BaseShift, var, shift});
                        if (!mm.shift.is_zero())
                            res.changes.push_back(
                                {ChangeRecord::Kind::MainShift, -1, mm.shift});
                        res.f = mm.f;
                        res.polyhedron = mm.polyhedron;
                        --budget;
                        applied = true;
                        break;
                    }
                    if (applied) break;
                }
            }
            if (applied) break;
        }
        if (!applied) {
            res.minimized = false;
            return res;
        }
    }
    return res;
}

}  // namespace quasiord
