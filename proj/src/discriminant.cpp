#include "quasiord/discriminant.hpp"

#include <utility>

namespace quasiord {

SparsePolynomial exact_divide(const SparsePolynomial& p, const SparsePolynomial& d) {
    if (d.is_zero()) throw ZeroPolynomial("exact_divide: zero divisor");
    SparsePolynomial rem = p;
    SparsePolynomial quot(p.signature());
    const auto& dlead = *d.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        Exponents q = rlead.first;
        for (size_t i = 0; i < q.base.size(); ++i) {
            q.base[i] -= dlead.first.base[i];
            if (q.base[i] < 0) throw ZeroPolynomial("exact_divide: not divisible");
        }
        for (size_t i = 0; i < q.tower.size(); ++i) {
            q.tower[i] -= dlead.first.tower[i];
            if (q.tower[i] < 0) throw ZeroPolynomial("exact_divide: not divisible");
        }
        q.main -= dlead.first.main;
        if (q.main < 0) throw ZeroPolynomial("exact_divide: not divisible");
        SparsePolynomial t =
            SparsePolynomial::monomial(p.signature(), std::move(q), rlead.second / dlead.second);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

SparsePolynomial derivative_main(const SparsePolynomial& f) {
    SparsePolynomial r(f.signature());
    for (const auto& [e, c] : f.terms()) {
        if (e.main == 0) continue;
        Exponents q = e;
        q.main -= 1;
        r.add_term(std::move(q), Rat(static_cast<long>(e.main)) * c);
    }
    return r;
}

namespace {

// Determinant by two-step fraction-free elimination; every division is exact.
SparsePolynomial bareiss_determinant(std::vector<std::vector<SparsePolynomial>> m,
                                     const Signature& sig) {
    const int k = static_cast<int>(m.size());
    if (k == 0) return SparsePolynomial::constant(sig, Rat(1));
    int sign = 1;
    SparsePolynomial prev = SparsePolynomial::constant(sig, Rat(1));
    for (int p = 0; p < k - 1; ++p) {
        if (m[p][p].is_zero()) {
            int swap_row = -1;
            for (int r = p + 1; r < k; ++r)
                if (!m[r][p].is_zero()) { swap_row = r; break; }
            if (swap_row < 0) return SparsePolynomial::zero(sig);
            std::swap(m[p], m[swap_row]);
            sign = -sign;
        }
        for (int i = p + 1; i < k; ++i) {
            for (int j = p + 1; j < k; ++j)
                m[i][j] = exact_divide(m[p][p] * m[i][j] - m[i][p] * m[p][j], prev);
            m[i][p] = SparsePolynomial::zero(sig);
        }
        prev = m[p][p];
    }
    SparsePolynomial det = m[k - 1][k - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

SparsePolynomial resultant_main(const SparsePolynomial& f, const SparsePolynomial& g) {
    const Signature sig = f.signature();
    const int n = f.degree_in_main();
    const int m = g.degree_in_main();
    if (n < 0 || m < 0) return SparsePolynomial::zero(sig);
    if (m == 0) return g.coefficient_of_main(0).pow(n);
    if (n == 0) return f.coefficient_of_main(0).pow(m);

    std::vector<SparsePolynomial> fc(n + 1, SparsePolynomial(sig)),
        gc(m + 1, SparsePolynomial(sig));
    for (int i = 0; i <= n; ++i) fc[i] = f.coefficient_of_main(n - i);
    for (int i = 0; i <= m; ++i) gc[i] = g.coefficient_of_main(m - i);

    const int k = n + m;
    std::vector<std::vector<SparsePolynomial>> syl(
        k, std::vector<SparsePolynomial>(k, SparsePolynomial(sig)));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) syl[r][r + i] = fc[i];
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) syl[m + r][r + i] = gc[i];
    return bareiss_determinant(std::move(syl), sig);
}

SparsePolynomial discriminant_main(const SparsePolynomial& f) {
    int n = weierstrass_validate(f);
    SparsePolynomial res = resultant_main(f, derivative_main(f));
    long exp = static_cast<long>(n) * (n - 1) / 2;
    return (exp % 2 == 1) ? -res : res;
}

std::optional<std::vector<int>> dominance_test(const SparsePolynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("dominance_test: zero polynomial");
    if (p.degree_in_main() > 0)
        throw SignatureMismatch("dominance_test: expects a polynomial in the base variables");
    for (int j = 0; j < p.signature().tower; ++j)
        if (p.degree_in({VarKind::Tower, j}) > 0)
            throw SignatureMismatch("dominance_test: expects a polynomial in the base variables");
    const int d = p.signature().base;
    std::vector<int> low(d, 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            low = e.base;
            first = false;
            continue;
        }
        for (int i = 0; i < d; ++i) low[i] = std::min(low[i], e.base[i]);
    }
    Exponents probe = zero_exponents(p.signature());
    probe.base = low;
    if (p.coefficient(probe).is_zero()) return std::nullopt;
    return low;
}

}  // namespace quasiord
