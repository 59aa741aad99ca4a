#include "quasiord/univar.hpp"

#include <algorithm>

namespace quasiord {
namespace univar {

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly derivative(const Poly& p) {
    Poly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(Rat(static_cast<long>(i)) * p[i]);
    trim(r);
    return r;
}

Rat eval(const Poly& p, const Rat& x) {
    Rat s(0);
    for (size_t i = p.size(); i-- > 0;) s = s * x + p[i];
    return s;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw ZeroPolynomial("univariate division by zero");
    Poly rem = a, quot;
    trim(rem);
    int db = degree(b);
    if (degree(rem) >= db) quot.assign(rem.size() - db, Rat(0));
    while (degree(rem) >= db) {
        int k = degree(rem) - db;
        Rat c = rem.back() / b[db];
        quot[k] = c;
        for (int i = 0; i <= db; ++i) rem[k + i] -= c * b[i];
        trim(rem);
    }
    trim(quot);
    return {quot, rem};
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

std::vector<Rat> rational_roots(const Poly& p) {
    Poly q = p;
    trim(q);
    std::vector<Rat> roots;
    if (q.empty()) return roots;
    while (!q.empty() && q.front().is_zero()) {
        if (roots.empty() || roots.back() != Rat(0)) roots.push_back(Rat(0));
        q.erase(q.begin());
    }
    if (degree(q) < 1) return roots;

    // Clear denominators to a primitive integer polynomial.
    Int den(1);
    for (const auto& c : q) den = lcm(den, c.den());
    std::vector<Int> z(q.size());
    for (size_t i = 0; i < q.size(); ++i) z[i] = q[i].num() * (den / q[i].den());
    Int content(0);
    for (const auto& c : z) content = gcd(content, c);
    if (content > 1)
        for (auto& c : z) c /= content;

    auto divisors = [](Int n) {
        n = abs(n);
        std::vector<Int> ds;
        for (Int i(1); i * i <= n; ++i) {
            if (n % i == 0) {
                ds.push_back(i);
                if (i * i != n) ds.push_back(n / i);
            }
        }
        return ds;
    };
    for (const Int& pn : divisors(z.front()))
        for (const Int& qd : divisors(z.back()))
            for (int s : {1, -1}) {
                Rat cand(s * pn, qd);
                if (eval(q, cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

int multiplicity(Poly p, const Rat& r) {
    trim(p);
    int m = 0;
    Poly lin{-r, Rat(1)};
    while (!p.empty()) {
        auto [q, rem] = divmod(p, lin);
        if (!rem.empty()) break;
        ++m;
        p = std::move(q);
    }
    return m;
}

std::optional<Rat> single_root_of_power(const Poly& p) {
    Poly q = p;
    trim(q);
    int d = degree(q);
    if (d < 1) return std::nullopt;
    Poly g = gcd(q, derivative(q));
    auto [sf, rem] = divmod(q, g);
    if (!rem.empty()) throw ZeroPolynomial("single_root_of_power: gcd division failed");
    if (degree(sf) != 1) return std::nullopt;
    Rat r = -sf[0] / sf[1];
    if (multiplicity(q, r) != d) return std::nullopt;
    return r;
}

}  // namespace univar
}  // namespace quasiord
