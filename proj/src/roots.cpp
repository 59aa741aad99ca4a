#include "quasiord/roots.hpp"

#include <algorithm>
#include <numeric>

namespace quasiord {

namespace {

using SKey = std::vector<int>;

int grade_of(const SKey& k) { return std::accumulate(k.begin(), k.end(), 0); }

// Sparse power series over an extension tower, truncated by graded degree.
struct Series {
    std::map<SKey, Elem> t;

    void add_term(const ExtensionTower& tw, const SKey& k, const Elem& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = t.emplace(k, v);
        if (!fresh) {
            it->second = tw.add(it->second, v);
            if (it->second.is_zero()) t.erase(it);
        }
    }
};

Series series_add(const ExtensionTower& tw, const Series& a, const Series& b, int cap) {
    Series r = a;
    for (const auto& [k, v] : b.t)
        if (grade_of(k) <= cap) r.add_term(tw, k, v);
    return r;
}

Series series_scale(const ExtensionTower& tw, const Elem& c, const Series& a) {
    Series r;
    for (const auto& [k, v] : a.t) {
        Elem w = tw.mul(c, v);
        if (!w.is_zero()) r.t.emplace(k, std::move(w));
    }
    return r;
}

Series series_neg(const ExtensionTower& tw, const Series& a) {
    Series r;
    for (const auto& [k, v] : a.t) r.t.emplace(k, tw.neg(v));
    return r;
}

Series series_shift(const Series& a, const SKey& off, int cap) {
    Series r;
    for (const auto& [k, v] : a.t) {
        SKey kk = k;
        for (size_t i = 0; i < kk.size(); ++i) kk[i] += off[i];
        if (grade_of(kk) <= cap) r.t.emplace(std::move(kk), v);
    }
    return r;
}

Series series_mul(const ExtensionTower& tw, const Series& a, const Series& b, int cap) {
    Series r;
    for (const auto& [ka, va] : a.t) {
        int ga = grade_of(ka);
        if (ga > cap) continue;
        for (const auto& [kb, vb] : b.t) {
            if (ga + grade_of(kb) > cap) continue;
            SKey k(ka.size());
            for (size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
            r.add_term(tw, k, tw.mul(va, vb));
        }
    }
    return r;
}

}  // namespace

namespace {

// Common construction of the branch tower: one root of unity of order
// N = prod n_i when some eta is nontrivial, reference radicals for the
// c-values, and integer correction exponents making every branch's c-tuple
// satisfy c_t^{n_{t+1}} = rho_t * c^{b(t)}.
struct BranchSystem {
    std::shared_ptr<ExtensionTower> tower;
    int order = 1;                        // N
    bool has_zeta = false;
    std::vector<Elem> ref_c;              // reference branch (all eta = 0)
    std::vector<Elem> ref_c_inv;
    std::vector<std::vector<long>> corr;  // corr[t][j]: exponent of zeta per eta_j

    std::vector<int> indices;
};

BranchSystem build_branch_system(const CycleState& state, bool with_zeta) {
    BranchSystem sys;
    sys.tower = std::make_shared<ExtensionTower>();
    sys.indices = state.indices;
    const int g = state.tower.depth();
    sys.order = 1;
    for (int ni : state.indices) sys.order *= ni;
    sys.has_zeta = with_zeta && sys.order > 1;
    if (sys.has_zeta) sys.tower->root_of_unity(sys.order, 1);  // adjoin once

    ExtensionTower& tw = *sys.tower;
    for (int t = 0; t < g; ++t) {
        const int nt = state.indices[t];
        Elem base = tw.from_rat(state.rhos[t]);
        const auto& b = state.monos[t].tower;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] > 0) base = tw.mul(base, tw.pow(sys.ref_c[j], b[j]));

        Elem c;
        if (tw.is_rational(base)) {
            if (auto r = rational_root(tw.rat_value(base), nt)) c = tw.from_rat(*r);
        }
        if (c.is_zero()) c = tw.adjoin_radical("r" + std::to_string(t), nt, base);
        sys.ref_c.push_back(c);

        Elem base_inv = tw.from_rat(Rat(1) / state.rhos[t]);
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] > 0) base_inv = tw.mul(base_inv, tw.pow(sys.ref_c_inv[j], b[j]));
        sys.ref_c_inv.push_back(tw.mul(tw.pow(c, nt - 1), base_inv));

        // zeta-exponent corrections: corr[t] = (sum_j b_j corr[j] + N e_t)/n_t
        std::vector<long> row(g, 0);
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] > 0)
                for (int i = 0; i < g; ++i) row[i] += static_cast<long>(b[j]) * sys.corr[j][i];
        row[t] += sys.order;
        for (int i = 0; i < g; ++i) {
            if (row[i] % nt != 0)
                throw ZeroDivisorInExtension("branch correction exponent is not integral");
            row[i] /= nt;
        }
        sys.corr.push_back(std::move(row));
    }
    return sys;
}

BranchContext branch_from_system(const BranchSystem& sys, const std::vector<int>& eta) {
    BranchContext ctx;
    ctx.tower = sys.tower;
    ctx.eta = eta;
    ExtensionTower& tw = *sys.tower;
    const int g = static_cast<int>(sys.ref_c.size());
    for (int t = 0; t < g; ++t) {
        long w = 0;
        for (int j = 0; j < g; ++j) w += static_cast<long>(eta[j]) * sys.corr[t][j];
        w %= sys.order;
        if (w < 0) w += sys.order;
        if (w == 0) {
            ctx.c.push_back(sys.ref_c[t]);
            ctx.c_inv.push_back(sys.ref_c_inv[t]);
        } else {
            Elem zeta = tw.root_of_unity(sys.order, static_cast<int>(w));
            Elem zeta_inv = tw.root_of_unity(sys.order, static_cast<int>(sys.order - w));
            ctx.c.push_back(tw.mul(zeta, sys.ref_c[t]));
            ctx.c_inv.push_back(tw.mul(zeta_inv, sys.ref_c_inv[t]));
        }
    }
    return ctx;
}

}  // namespace

BranchContext initial_coefficients(const CycleState& state, const std::vector<int>& eta) {
    const int g = state.tower.depth();
    if (static_cast<int>(eta.size()) != g)
        throw SignatureMismatch("eta choice must have one entry per cycle");
    bool trivial = true;
    for (int i = 0; i < g; ++i) {
        if (eta[i] < 0 || eta[i] >= state.indices[i])
            throw SignatureMismatch("eta entry out of range");
        if (eta[i] != 0) trivial = false;
    }
    BranchSystem sys = build_branch_system(state, !trivial);
    return branch_from_system(sys, eta);
}

std::vector<BranchContext> all_branch_contexts(const CycleState& state) {
    const int g = state.tower.depth();
    BranchSystem sys = build_branch_system(state, true);
    std::vector<BranchContext> out;
    std::vector<int> eta(g, 0);
    while (true) {
        out.push_back(branch_from_system(sys, eta));
        int i = 0;
        while (i < g && ++eta[i] == state.indices[i]) eta[i++] = 0;
        if (i == g) break;
    }
    return out;
}

int default_root_bound(const CycleState& state) {
    if (state.tower.depth() == 0) return 4 * state.n;
    auto lambdas = gamma_to_lambda(state.tower.gammas(), state.indices);
    Rat lim = Rat(3 * state.n) * grade(lambdas.back());
    // round up to an integer s-grade
    Int q = lim.num() / lim.den() + (lim.den() == 1 ? 0 : 1);
    return static_cast<int>(q.get_si());
}

RootSeries expand_root(const CycleState& state, const BranchContext& branch, int bound) {
    const int g = state.tower.depth();
    const int d = state.d;
    const int n = state.n;
    ExtensionTower& tw = *branch.tower;

    RootSeries out;
    out.n = n;
    out.bound = bound;
    out.tower = branch.tower;

    if (g > 0) {
        auto lambdas = gamma_to_lambda(state.tower.gammas(), state.indices);
        if (Rat(bound) < Rat(n) * grade(lambdas.back()))
            throw BoundTooSmall("root bound below n*|lambda_g|");
        if (!state.completed)
            throw NotQuasiOrdinaryState("expand_root requires a completed construction");
    }

    // s-scale leading exponents n*gamma_{r+1}
    std::vector<SKey> lead(g);
    std::vector<int> lead_grade(g);
    for (int r = 0; r < g; ++r) {
        lead[r].resize(d);
        FracVector ng = Rat(n) * state.tower.gamma(r);
        for (int i = 0; i < d; ++i) {
            if (!ng[i].is_integer())
                throw NotQuasiOrdinaryState("leading exponent is not integral in the s-scale");
            lead[r][i] = static_cast<int>(ng[i].num().get_si());
        }
        lead_grade[r] = grade_of(lead[r]);
    }
    const int p_max = g > 0 ? std::max(0, bound - lead_grade[0]) : 0;

    // Current series and cached powers of each u_r.
    std::vector<Series> u(g);
    std::vector<int> max_pow(g, 1);
    for (int r = 0; r < g; ++r) {
        u[r].t.emplace(lead[r], branch.c[r]);
        max_pow[r] = state.indices[r];
        for (int t = 0; t < g; ++t) {
            if (t < static_cast<int>(state.monos.size())) {
                const auto& tv = state.monos[t].tower;
                if (r < static_cast<int>(tv.size())) max_pow[r] = std::max(max_pow[r], tv[r]);
            }
            for (const auto& [e, cc] : state.shifts[t + 1].terms())
                if (r < static_cast<int>(e.tower.size()))
                    max_pow[r] = std::max(max_pow[r], e.tower[r]);
        }
    }
    std::vector<int> cap(g);
    for (int r = 0; r < g; ++r) cap[r] = state.indices[r] * lead_grade[r] + p_max;
    const int cap_all = cap.empty() ? bound : *std::max_element(cap.begin(), cap.end());

    std::vector<std::vector<Series>> pw(g);
    auto rebuild_powers = [&](int r) {
        pw[r].assign(max_pow[r] + 1, Series{});
        pw[r][0].t.emplace(SKey(d, 0), tw.from_rat(Rat(1)));
        for (int k = 1; k <= max_pow[r]; ++k)
            pw[r][k] = series_mul(tw, pw[r][k - 1], u[r], cap_all);
    };
    for (int r = 0; r < g; ++r) rebuild_powers(r);

    // Inverse of the linear pivot n_{r+1} c_r^{n_{r+1}-1}.
    std::vector<Elem> pivot_inv(g);
    for (int r = 0; r < g; ++r)
        pivot_inv[r] = tw.mul(Rat(1, state.indices[r]),
                              tw.pow(branch.c_inv[r], state.indices[r] - 1));

    // Structural pieces of f_r = u_{r+1} - u_r^{n_{r+1}} + rho * S^{na} u^b - tails.
    auto monomial_skey = [&](const std::vector<int>& xexp) {
        SKey k(d);
        for (int i = 0; i < d; ++i) k[i] = n * xexp[i];
        return k;
    };

    auto residual = [&](int r) {
        Series res;
        if (r + 1 < g) res = u[r + 1];
        res = series_add(tw, res, series_neg(tw, pw[r][state.indices[r]]), cap[r]);

        Series bin;
        bin.t.emplace(SKey(d, 0), tw.from_rat(state.rhos[r]));
        const auto& bexp = state.monos[r].tower;
        for (size_t j = 0; j < bexp.size(); ++j)
            if (bexp[j] > 0) bin = series_mul(tw, bin, pw[j][bexp[j]], cap[r]);
        bin = series_shift(bin, monomial_skey(state.monos[r].base), cap[r]);
        res = series_add(tw, res, bin, cap[r]);

        for (const auto& [e, mu] : state.shifts[r + 1].terms()) {
            Series tail;
            tail.t.emplace(SKey(d, 0), tw.from_rat(mu));
            for (size_t j = 0; j < e.tower.size(); ++j)
                if (e.tower[j] > 0) tail = series_mul(tw, tail, pw[j][e.tower[j]], cap[r]);
            tail = series_shift(tail, monomial_skey(e.base), cap[r]);
            res = series_add(tw, res, series_neg(tw, tail), cap[r]);
        }
        return res;
    };

    for (int p = 1; p <= p_max; ++p) {
        bool all_settled = true;
        for (int r = 0; r < g; ++r) {
            Series res = residual(r);
            if (!res.t.empty()) all_settled = false;
            bool touched = false;
            for (const auto& [key, val] : res.t) {
                SKey off(d);
                bool in_orthant = true;
                for (int i = 0; i < d; ++i) {
                    off[i] = key[i] - state.indices[r] * lead[r][i];
                    if (off[i] < 0) in_orthant = false;
                }
                int pg = grade_of(key) - state.indices[r] * lead_grade[r];
                if (!in_orthant || pg < p)
                    throw NotQuasiOrdinaryState(
                        "parametrization residual outside the solvable cone");
                if (pg > p) continue;
                SKey m = lead[r];
                for (int i = 0; i < d; ++i) m[i] += off[i];
                u[r].add_term(tw, m, tw.mul(pivot_inv[r], val));
                touched = true;
            }
            if (touched) rebuild_powers(r);
        }
        // nothing left to solve at any level: the series has terminated
        if (all_settled) break;
    }

    // z-root: u_0 minus the first-cycle shift, truncated at the bound.
    Series root = g > 0 ? u[0] : Series{};
    for (const auto& [e, c] : state.shifts.at(0).terms()) {
        SKey k = monomial_skey(e.base);
        if (grade_of(k) <= bound) root.add_term(tw, k, tw.from_rat(-c));
    }
    for (const auto& [k, v] : root.t)
        if (grade_of(k) <= bound) out.terms.emplace(k, v);
    return out;
}

RootSeries expand_root(const CycleState& state, const std::vector<int>& eta, int bound) {
    return expand_root(state, initial_coefficients(state, eta), bound);
}

ResidualReport verify_root(const SparsePolynomial& f, const RootSeries& zeta, int bound) {
    const ExtensionTower& tw = *zeta.tower;
    const int d = f.signature().base;
    const int n = zeta.n;

    Series z;
    z.t.insert(zeta.terms.begin(), zeta.terms.end());
    int degree = f.degree_in_main();
    std::vector<Series> zpow(degree + 1);
    zpow[0].t.emplace(SKey(d, 0), tw.from_rat(Rat(1)));
    for (int k = 1; k <= degree; ++k) zpow[k] = series_mul(tw, zpow[k - 1], z, bound);

    Series total;
    for (const auto& [e, c] : f.terms()) {
        SKey base(d);
        for (int i = 0; i < d; ++i) base[i] = n * e.base[i];
        if (grade_of(base) > bound) continue;
        Series piece = series_shift(zpow[e.main], base, bound);
        total = series_add(tw, total, series_scale(tw, tw.from_rat(c), piece), bound);
    }

    ResidualReport rep;
    rep.pass = total.t.empty();
    if (!rep.pass) {
        auto best = total.t.begin();
        for (auto it = total.t.begin(); it != total.t.end(); ++it)
            if (grade_of(it->first) < grade_of(best->first)) best = it;
        rep.offending = best->first;
    }
    return rep;
}

FracVector root_difference_valuation(const RootSeries& zeta1, const RootSeries& zeta2) {
    if (zeta1.tower != zeta2.tower)
        throw SignatureMismatch("root difference requires a common extension tower");
    if (zeta1.n != zeta2.n || zeta1.bound != zeta2.bound)
        throw SignatureMismatch("root difference requires equal scales and bounds");
    const ExtensionTower& tw = *zeta1.tower;
    Series diff;
    diff.t.insert(zeta1.terms.begin(), zeta1.terms.end());
    for (const auto& [k, v] : zeta2.terms) diff.add_term(tw, k, tw.neg(v));
    if (diff.t.empty()) throw NoDominantTerm("roots agree up to the bound");

    SKey low = diff.t.begin()->first;
    for (const auto& [k, v] : diff.t)
        for (size_t i = 0; i < low.size(); ++i) low[i] = std::min(low[i], k[i]);
    if (diff.t.find(low) == diff.t.end())
        throw NoDominantTerm("difference has no least exponent");
    FracVector out(low.size());
    for (size_t i = 0; i < low.size(); ++i) out[i] = Rat(low[i], zeta1.n);
    return out;
}

bool branch_product_matches(const CycleState& state, int bound) {
    SparsePolynomial g = input_in_minimized_coordinates(state);
    auto branches = all_branch_contexts(state);
    if (branches.empty()) return false;
    const ExtensionTower& tw = *branches.front().tower;
    const int d = state.d;

    // prod (z - zeta_b) as a polynomial in z with series coefficients
    std::vector<Series> poly(1);
    poly[0].t.emplace(SKey(d, 0), tw.from_rat(Rat(1)));
    for (const auto& br : branches) {
        RootSeries zeta = expand_root(state, br, bound);
        Series neg;
        for (const auto& [k, v] : zeta.terms) neg.t.emplace(k, tw.neg(v));
        std::vector<Series> next(poly.size() + 1);
        for (size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = series_add(tw, next[k + 1], poly[k], bound);
            next[k] = series_add(tw, next[k], series_mul(tw, poly[k], neg, bound), bound);
        }
        poly = std::move(next);
    }

    if (static_cast<int>(poly.size()) != state.n + 1) return false;
    for (int k = 0; k <= state.n; ++k) {
        Series expect;
        const SparsePolynomial coeff = g.coefficient_of_main(k);
        for (const auto& [e, c] : coeff.terms()) {
            SKey key(d);
            for (int i = 0; i < d; ++i) key[i] = state.n * e.base[i];
            if (grade_of(key) <= bound) expect.add_term(tw, key, tw.from_rat(c));
        }
        Series diff = series_add(tw, expect, series_neg(tw, poly[k]), bound);
        if (!diff.t.empty()) return false;
    }
    return true;
}

}  // namespace quasiord
