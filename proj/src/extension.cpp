#include "quasiord/extension.hpp"

#include <algorithm>

namespace quasiord {

namespace {

// Coefficients of the m-th cyclotomic polynomial, ascending, for the small
// orders occurring as cycle indices.
std::vector<long> cyclotomic_coeffs(int m) {
    switch (m) {
        case 3: return {1, 1, 1};
        case 4: return {1, 0, 1};
        case 5: return {1, 1, 1, 1, 1};
        case 6: return {1, -1, 1};
        case 7: return {1, 1, 1, 1, 1, 1, 1};
        case 8: return {1, 0, 0, 0, 1};
        case 9: return {1, 0, 0, 1, 0, 0, 1};
        case 10: return {1, -1, 1, -1, 1};
        case 12: return {1, 0, -1, 0, 1};
        default:
            throw ZeroDivisorInExtension("no cyclotomic polynomial of order " +
                                         std::to_string(m) + " on file");
    }
}

}  // namespace

Elem ExtensionTower::from_rat(const Rat& c) const {
    Elem e;
    if (!c.is_zero()) e.terms.emplace(std::vector<int>(depth(), 0), c);
    return e;
}

Elem ExtensionTower::gen(int i) const {
    Elem e;
    std::vector<int> k(depth(), 0);
    k[i] = 1;
    e.terms.emplace(std::move(k), Rat(1));
    return e;
}

namespace {
void widen_keys(Elem& e, int depth) {
    if (e.terms.empty()) return;
    if (static_cast<int>(e.terms.begin()->first.size()) == depth) return;
    std::map<std::vector<int>, Rat> wide;
    for (const auto& [k, c] : e.terms) {
        std::vector<int> kk = k;
        kk.resize(depth, 0);
        wide.emplace(std::move(kk), c);
    }
    e.terms = std::move(wide);
}
}  // namespace

Elem ExtensionTower::root_of_unity(int m, int power) {
    power = ((power % m) + m) % m;
    if (m <= 2 || power == 0) {
        int sign = (m == 2 && power == 1) ? -1 : 1;
        return from_rat(Rat(sign));
    }
    auto it = cyclotomic_.find(m);
    int idx;
    if (it != cyclotomic_.end()) {
        idx = it->second;
    } else {
        auto coeffs = cyclotomic_coeffs(m);
        Level lvl;
        lvl.name = "zeta" + std::to_string(m);
        lvl.degree = static_cast<int>(coeffs.size()) - 1;
        lvl.cyclotomic_order = m;
        for (size_t i = 0; i + 1 < coeffs.size(); ++i) lvl.modulus_tail.push_back(from_rat(Rat(coeffs[i])));
        levels_.push_back(std::move(lvl));
        idx = depth() - 1;
        cyclotomic_.emplace(m, idx);
    }
    return pow(gen(idx), power);
}

Elem ExtensionTower::adjoin_radical(const std::string& name, int n, const Elem& base) {
    Level lvl;
    lvl.name = name;
    lvl.degree = n;
    lvl.modulus_tail.assign(n, Elem{});
    lvl.modulus_tail[0] = neg(base);  // y^n - base
    levels_.push_back(std::move(lvl));
    return gen(depth() - 1);
}

Elem ExtensionTower::add(const Elem& a, const Elem& b) const {
    Elem r = a;
    widen_keys(r, depth());
    for (const auto& [k, c] : b.terms) {
        std::vector<int> kk = k;
        kk.resize(depth(), 0);
        auto [it, fresh] = r.terms.emplace(std::move(kk), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) r.terms.erase(it);
        }
    }
    return r;
}

Elem ExtensionTower::neg(const Elem& a) const {
    Elem r;
    for (const auto& [k, c] : a.terms) r.terms.emplace(k, -c);
    return r;
}

Elem ExtensionTower::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem ExtensionTower::mul(const Rat& c, const Elem& a) const {
    Elem r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.terms) r.terms.emplace(k, c * v);
    return r;
}

Elem ExtensionTower::mul(const Elem& a, const Elem& b) const {
    Elem r;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            std::vector<int> k(depth(), 0);
            for (size_t i = 0; i < ka.size(); ++i) k[i] += ka[i];
            for (size_t i = 0; i < kb.size(); ++i) k[i] += kb[i];
            auto [it, fresh] = r.terms.emplace(std::move(k), ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms.erase(it);
            }
        }
    return reduce(std::move(r));
}

Elem ExtensionTower::pow(const Elem& a, int e) const {
    if (e < 0) return inverse(pow(a, -e));
    Elem r = from_rat(Rat(1));
    Elem b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        if (e >>= 1) b = mul(b, b);
    }
    return r;
}

Elem ExtensionTower::reduce(Elem a) const {
    widen_keys(a, depth());
    while (true) {
        int lvl = -1;
        std::vector<int> key;
        for (const auto& [k, c] : a.terms) {
            for (int j = depth() - 1; j >= 0; --j) {
                if (k[j] >= levels_[j].degree) {
                    if (j > lvl) {
                        lvl = j;
                        key = k;
                    }
                    break;
                }
            }
        }
        if (lvl < 0) return a;
        Rat coeff = a.terms.at(key);
        a.terms.erase(key);
        std::vector<int> rest = key;
        rest[lvl] -= levels_[lvl].degree;
        // y^deg = -sum tail_i y^i
        for (int i = 0; i < levels_[lvl].degree; ++i) {
            const Elem& t = levels_[lvl].modulus_tail[i];
            if (t.is_zero()) continue;
            for (const auto& [tk, tc] : t.terms) {
                std::vector<int> k(depth(), 0);
                for (size_t j = 0; j < tk.size(); ++j) k[j] = rest[j] + tk[j];
                for (size_t j = tk.size(); j < k.size(); ++j) k[j] = rest[j];
                k[lvl] += i;
                Rat add = -coeff * tc;
                auto [it, fresh] = a.terms.emplace(std::move(k), add);
                if (!fresh) {
                    it->second += add;
                    if (it->second.is_zero()) a.terms.erase(it);
                }
            }
        }
    }
}

std::vector<Elem> ExtensionTower::as_univar(const Elem& a, int level) const {
    std::vector<Elem> coeffs(levels_[level].degree);
    for (const auto& [k, c] : a.terms) {
        for (int j = level + 1; j < depth(); ++j)
            if (k[j] != 0)
                throw ZeroDivisorInExtension("as_univar: element above requested level");
        std::vector<int> kk = k;
        int e = kk[level];
        kk[level] = 0;
        coeffs[e].terms.emplace(std::move(kk), c);
    }
    return coeffs;
}

Elem ExtensionTower::inverse(const Elem& a) const {
    if (a.is_zero()) throw ZeroDivisorInExtension("inverse of zero");
    Elem aa = a;
    widen_keys(aa, depth());
    int level = -1;
    for (const auto& [k, c] : aa.terms)
        for (int j = depth() - 1; j >= 0; --j)
            if (k[j] != 0) {
                level = std::max(level, j);
                break;
            }
    return inverse_at(aa, level + 1);
}

// Inversion inside the subtower spanned by the first `level` generators.
Elem ExtensionTower::inverse_at(const Elem& a, int level) const {
    if (level == 0) {
        Rat c = a.terms.begin()->second;
        return from_rat(Rat(1) / c);
    }
    const int top = level - 1;
    const int deg = levels_[top].degree;

    // Extended Euclid for gcd(a, modulus) as univariate polynomials in the
    // top generator over the subtower.
    using UP = std::vector<Elem>;
    auto degree_of = [](const UP& p) {
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
            if (!p[i].is_zero()) return i;
        return -1;
    };
    auto times = [&](const UP& p, const Elem& c, int shift) {
        UP r(p.size() + shift);
        for (size_t i = 0; i < p.size(); ++i)
            if (!p[i].is_zero()) r[i + shift] = mul(p[i], c);
        return r;
    };
    auto minus = [&](UP p, const UP& q) {
        if (p.size() < q.size()) p.resize(q.size());
        for (size_t i = 0; i < q.size(); ++i) p[i] = sub(p[i], q[i]);
        return p;
    };

    UP r0(deg + 1);  // modulus
    for (int i = 0; i < deg; ++i) r0[i] = levels_[top].modulus_tail[i];
    r0[deg] = from_rat(Rat(1));
    UP r1 = as_univar(a, top);
    UP s0{Elem{}}, s1{from_rat(Rat(1))};  // Bezout coefficients for a

    while (true) {
        int d1 = degree_of(r1);
        if (d1 < 0)
            throw ZeroDivisorInExtension("element is a zero divisor modulo " +
                                         levels_[top].name);
        if (d1 == 0) {
            Elem lead_inv = inverse_at(r1[0], top);
            UP res = times(s1, lead_inv, 0);
            Elem out;
            for (size_t i = 0; i < res.size(); ++i) {
                if (res[i].is_zero()) continue;
                Elem shifted;
                for (const auto& [k, c] : res[i].terms) {
                    std::vector<int> kk = k;
                    if (static_cast<int>(kk.size()) < depth()) kk.resize(depth(), 0);
                    kk[top] += static_cast<int>(i);
                    shifted.terms.emplace(std::move(kk), c);
                }
                out = add(out, shifted);
            }
            return reduce(std::move(out));
        }
        int d0 = degree_of(r0);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        Elem q = mul(r0[d0], inverse_at(r1[d1], top));
        r0 = minus(std::move(r0), times(r1, q, d0 - d1));
        s0 = minus(std::move(s0), times(s1, q, d0 - d1));
    }
}

bool ExtensionTower::equal(const Elem& a, const Elem& b) const { return sub(a, b).is_zero(); }

bool ExtensionTower::is_rational(const Elem& a) const {
    if (a.terms.empty()) return true;
    if (a.terms.size() != 1) return false;
    const auto& k = a.terms.begin()->first;
    return std::all_of(k.begin(), k.end(), [](int e) { return e == 0; });
}

Rat ExtensionTower::rat_value(const Elem& a) const {
    if (a.terms.empty()) return Rat(0);
    if (!is_rational(a)) throw ZeroDivisorInExtension("element is not rational");
    return a.terms.begin()->second;
}

std::string ExtensionTower::to_string(const Elem& a) const {
    if (a.terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : a.terms) {
        std::string term;
        bool all_zero = std::all_of(k.begin(), k.end(), [](int e) { return e == 0; });
        if (all_zero) {
            term = c.str();
        } else {
            if (c == Rat(-1)) term = "-";
            else if (!(c == Rat(1))) term = c.str() + "*";
            bool first_gen = true;
            for (size_t i = 0; i < k.size(); ++i) {
                if (k[i] == 0) continue;
                if (!first_gen) term += "*";
                term += levels_[i].name;
                if (k[i] > 1) term += "^" + std::to_string(k[i]);
                first_gen = false;
            }
        }
        if (!first && term[0] != '-') s += "+";
        s += term;
        first = false;
    }
    return s;
}

}  // namespace quasiord
