#include "quasiord/corpus.hpp"

#include <random>

#include "quasiord/certificate.hpp"
#include "quasiord/lattice.hpp"

namespace quasiord {

namespace {

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    Rat coefficient() {
        static const Rat pool[] = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(1, 2), Rat(3)};
        return pool[uniform(0, 5)];
    }
    Rat unit_rho() {
        static const Rat pool[] = {Rat(1), Rat(-1), Rat(1), Rat(2), Rat(1), Rat(-1)};
        return pool[uniform(0, 5)];
    }
};

VarDecl decl_for(int d) {
    VarDecl decl;
    for (int i = 1; i <= d; ++i) decl.base.push_back("x" + std::to_string(i));
    decl.main = "z";
    return decl;
}

int gcd_all(int acc, const std::vector<int>& v) {
    for (int x : v) {
        Int g = gcd(Int(acc), Int(x));
        acc = static_cast<int>(g.get_si());
    }
    return acc;
}

SparsePolynomial x_monomial(Signature sig, const std::vector<int>& a, const Rat& c) {
    return SparsePolynomial::monomial(sig, Exponents{a, {}, 0}, c);
}

// Quasi-ordinary by construction: the approximate-root recursion with
// exponents sampled to satisfy the vertex-growth and lattice conditions.
CorpusInstance make_tower(Gen& g, int d, std::vector<int> ns, bool allow_tails,
                          bool with_shift) {
    Signature sig{d, 0};
    const int cycles = static_cast<int>(ns.size());
    std::vector<SparsePolynomial> q{SparsePolynomial::variable(sig, {VarKind::Main, 0})};
    std::vector<FracVector> gammas;

    for (int j = 0; j < cycles; ++j) {
        const int nj = ns[j];
        std::vector<int> a(d, 0), b(j, 0);
        FracVector gamma;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 200) throw NotQuasiOrdinaryState("corpus sampling stalled");
            if (j == 0) {
                for (auto& x : a) x = g.uniform(0, 3);
            } else {
                for (int i = 0; i < d; ++i) {
                    Rat lo = Rat(nj * ns[j - 1]) * gammas[j - 1][i];
                    Int ceil = lo.num() / lo.den() + (lo.den() == 1 ? 0 : 1);
                    a[i] = static_cast<int>(ceil.get_si()) + g.uniform(0, 2);
                }
                for (int i = 0; i < j; ++i) b[i] = g.uniform(0, ns[i] - 1);
            }
            int content = gcd_all(gcd_all(nj, a), b);
            if (content != 1) continue;

            gamma.assign(d, Rat(0));
            for (int i = 0; i < d; ++i) gamma[i] = Rat(a[i], nj);
            for (int i = 0; i < j; ++i)
                if (b[i] > 0) gamma = gamma + Rat(b[i], nj) * gammas[i];

            if (is_zero(gamma)) continue;
            if (j > 0 && !product_gt(gamma, Rat(ns[j - 1]) * gammas[j - 1])) continue;
            // the new vertex must have order exactly n_j in Q^d / L_{j-1},
            // otherwise the binomial edge is imprimitive and the instance
            // splits over the closure
            int order = 0;
            for (int c = 1; c <= nj; ++c)
                if (lattice_membership(Rat(c) * gamma, gammas)) { order = c; break; }
            if (order != nj) continue;
            break;
        }
        gammas.push_back(gamma);

        // In chains of depth >= 3 the middle binomials get raised to powers,
        // and the restricted-power rewriting folds rho_j back into deeper
        // edge coefficients; those edges stay perfect powers only for
        // rho_j = 1. Two-cycle towers never re-enter a relation, so their
        // coefficients are free.
        Rat rho = (cycles >= 3 && j + 1 < cycles) ? Rat(1) : g.unit_rho();
        SparsePolynomial mono = x_monomial(sig, a, rho);
        for (int i = 0; i < j; ++i)
            if (b[i] > 0) mono = mono * q[i].pow(b[i]);
        SparsePolynomial next = q.back().pow(nj) - mono;

        if (allow_tails && g.uniform(0, 2) == 0) {
            std::vector<int> delta(d, 0);
            int beta = g.uniform(0, nj - 1);
            for (auto& x : delta) x = g.uniform(0, 1);
            int total = beta;
            for (int x : delta) total += x;
            if (total > 0) {
                std::vector<int> ae = a;
                for (int i = 0; i < d; ++i) ae[i] += delta[i];
                SparsePolynomial tail = x_monomial(sig, ae, g.coefficient());
                for (int i = 0; i < j; ++i)
                    if (b[i] > 0) tail = tail * q[i].pow(b[i]);
                if (beta > 0) tail = tail * q[j].pow(beta);
                next += tail;
            }
        }
        q.push_back(next);
    }

    SparsePolynomial f = q.back();
    std::string recipe = "tower d=" + std::to_string(d) + " n=";
    int n = 1;
    for (int x : ns) n *= x;
    recipe += std::to_string(n);
    if (with_shift) {
        std::vector<int> s(d, 0);
        s[g.uniform(0, d - 1)] = g.uniform(1, 2);
        SparsePolynomial shift = x_monomial(sig, s, g.coefficient());
        f = f.substitute({VarKind::Main, 0},
                         SparsePolynomial::variable(sig, {VarKind::Main, 0}) + shift);
        recipe += " shifted";
    }
    return {decl_for(d), f, true, recipe};
}

// Two pure-base vertices that stay incomparable under every admissible
// change: the exponent pairs are chosen mutually non-divisible (so no
// base change can cancel either term) and off the k-th powers (so the
// polynomial stays irreducible and no main shift applies).
CorpusInstance make_incomparable(Gen& g) {
    int d = g.uniform(2, 3);
    int k = g.uniform(0, 1) ? 2 : 3;
    static const int pairs2[][2] = {{3, 5}, {5, 3}, {3, 7}, {7, 3}, {5, 7}, {7, 5}};
    static const int pairs3[][2] = {{4, 5}, {5, 4}, {4, 7}, {7, 4}, {5, 7}, {7, 5}};
    const auto& pick = k == 2 ? pairs2[g.uniform(0, 5)] : pairs3[g.uniform(0, 5)];
    int i = g.uniform(0, d - 1);
    int j = (i + 1 + g.uniform(0, d - 2)) % d;

    Signature sig{d, 0};
    std::vector<int> a(d, 0), b(d, 0);
    a[i] = pick[0];
    b[j] = pick[1];
    Rat e1 = g.uniform(0, 1) ? Rat(1) : Rat(2);
    Rat e2 = g.uniform(0, 1) ? Rat(1) : Rat(2);
    SparsePolynomial f =
        SparsePolynomial::monomial(sig, Exponents{std::vector<int>(d, 0), {}, k}, Rat(1)) -
        x_monomial(sig, a, e1) - x_monomial(sig, b, e2);
    return {decl_for(d), f,
            false,
            "incomparable d=" + std::to_string(d) + " n=" + std::to_string(k)};
}

CorpusInstance make_smooth(Gen& g) {
    int d = g.uniform(1, 3);
    Signature sig{d, 0};
    SparsePolynomial f = SparsePolynomial::variable(sig, {VarKind::Main, 0});
    int terms = g.uniform(0, 2);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> a(d, 0);
        a[g.uniform(0, d - 1)] = g.uniform(1, 3);
        f += x_monomial(sig, a, g.coefficient());
    }
    return {decl_for(d), f, true, "smooth d=" + std::to_string(d)};
}

CorpusInstance make_instance(Gen& g, int slot) {
    switch (slot % 8) {
        case 0:
        case 1: {
            int d = g.uniform(1, 3);
            std::vector<int> ns{g.uniform(2, d == 1 ? 6 : 4)};
            return make_tower(g, d, ns, true, false);
        }
        case 2: {
            int d = g.uniform(1, 3);
            int n1 = g.uniform(2, 3);
            int n2 = d >= 3 ? 2 : g.uniform(2, 6 / n1 >= 2 ? 6 / n1 : 2);
            return make_tower(g, d, {n1, n2}, d <= 2, false);
        }
        case 3: {
            int d = g.uniform(1, 2);
            std::vector<int> ns{g.uniform(2, 4)};
            return make_tower(g, d, ns, true, true);
        }
        case 4:
            return make_smooth(g);
        case 5:
        case 6:
            return make_incomparable(g);
        default: {
            // deeper chain, univariate base
            if (g.uniform(0, 1))
                return make_tower(g, 1, {2, 2, 2}, false, false);
            return make_tower(g, 1, {2, g.uniform(2, 4)}, true, false);
        }
    }
}

}  // namespace

std::vector<CorpusInstance> generate_corpus(int count, std::uint64_t seed) {
    Gen g(seed);
    std::vector<CorpusInstance> out;
    // fixed regression member: quasi-ordinary only after permuting the projection
    {
        Signature sig{2, 0};
        SparsePolynomial f =
            SparsePolynomial::monomial(sig, Exponents{{0, 0}, {}, 3}, Rat(1)) +
            SparsePolynomial::monomial(sig, Exponents{{0, 1}, {}, 2}, Rat(1)) +
            SparsePolynomial::monomial(sig, Exponents{{2, 0}, {}, 0}, Rat(1));
        out.push_back({decl_for(2), f, false, "fixed cuspidal"});
    }
    for (int i = 0; static_cast<int>(out.size()) < count; ++i)
        out.push_back(make_instance(g, i));
    return out;
}

CorpusOutcome evaluate_instance(const CorpusInstance& inst) {
    Certificate cert = qo_certificate(inst.f);
    CorpusOutcome o;
    o.engine_qo = cert.quasi_ordinary;
    o.oracle_qo = cert.delta.has_value();
    o.agree = cert.agreement;
    o.label_match = o.engine_qo == inst.expect_qo;
    o.recipe = inst.recipe;
    return o;
}

nlohmann::json corpus_report(int count, std::uint64_t seed) {
    nlohmann::json out;
    out["count"] = count;
    out["seed"] = seed;
    nlohmann::json rows = nlohmann::json::array();
    int agreements = 0, labels = 0;
    auto corpus = generate_corpus(count, seed);
    for (size_t i = 0; i < corpus.size(); ++i) {
        CorpusOutcome o = evaluate_instance(corpus[i]);
        agreements += o.agree;
        labels += o.label_match;
        rows.push_back({{"index", i},
                        {"recipe", o.recipe},
                        {"poly", render(corpus[i].f, corpus[i].decl)},
                        {"engine", o.engine_qo},
                        {"oracle", o.oracle_qo},
                        {"agree", o.agree},
                        {"label_match", o.label_match}});
    }
    out["instances"] = rows;
    out["summary"] = {{"agreements", agreements},
                      {"label_matches", labels},
                      {"all_agree", agreements == static_cast<int>(corpus.size())}};
    return out;
}

}  // namespace quasiord
