#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "quasiord/fracvec.hpp"
#include "quasiord/rational.hpp"

namespace quasiord {

// Variable layout of a polynomial ring: d base variables x1..xd, t tower
// variables u0..u_{t-1}, and one distinguished main variable.
struct Signature {
    int base = 0;
    int tower = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

enum class VarKind { Base, Tower, Main };

struct VarRef {
    VarKind kind;
    int index = 0;  // ignored for Main
    friend bool operator==(const VarRef&, const VarRef&) = default;
};

// Multi-exponent (base | tower | main), all entries >= 0.
struct Exponents {
    std::vector<int> base;
    std::vector<int> tower;
    int main = 0;

    int total() const {
        int s = main;
        for (int e : base) s += e;
        for (int e : tower) s += e;
        return s;
    }

    int at(VarRef v) const {
        switch (v.kind) {
            case VarKind::Base: return base[v.index];
            case VarKind::Tower: return tower[v.index];
            case VarKind::Main: return main;
        }
        return 0;
    }

    int& at(VarRef v) {
        switch (v.kind) {
            case VarKind::Base: return base[v.index];
            case VarKind::Tower: return tower[v.index];
            default: return main;
        }
    }

    friend bool operator==(const Exponents&, const Exponents&) = default;

    // Graded-lexicographic order on (base, tower, main); canonical storage
    // order of terms.
    friend std::strong_ordering operator<=>(const Exponents& a, const Exponents& b) {
        if (auto c = a.total() <=> b.total(); c != 0) return c;
        if (auto c = a.base <=> b.base; c != 0) return c;
        if (auto c = a.tower <=> b.tower; c != 0) return c;
        return a.main <=> b.main;
    }
};

inline Exponents zero_exponents(const Signature& sig) {
    return Exponents{std::vector<int>(sig.base, 0), std::vector<int>(sig.tower, 0), 0};
}

// Sparse multivariate polynomial over Q. Terms are stored canonically
// (graded-lex) and zero coefficients are never kept.
class SparsePolynomial {
public:
    SparsePolynomial() = default;
    explicit SparsePolynomial(Signature sig) : sig_(sig) {}

    static SparsePolynomial zero(Signature sig) { return SparsePolynomial(sig); }

    static SparsePolynomial constant(Signature sig, const Rat& c) {
        SparsePolynomial p(sig);
        p.add_term(zero_exponents(sig), c);
        return p;
    }

    static SparsePolynomial monomial(Signature sig, Exponents e, const Rat& c) {
        SparsePolynomial p(sig);
        p.check_exponents(e);
        p.add_term(std::move(e), c);
        return p;
    }

    static SparsePolynomial variable(Signature sig, VarRef v) {
        Exponents e = zero_exponents(sig);
        e.at(v) = 1;
        return monomial(sig, std::move(e), Rat(1));
    }

    const Signature& signature() const { return sig_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(Exponents e, const Rat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o) {
        check_sig(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    SparsePolynomial& operator-=(const SparsePolynomial& o) {
        check_sig(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }

    friend SparsePolynomial operator-(const SparsePolynomial& a) {
        SparsePolynomial r(a.sig_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        a.check_sig(b);
        SparsePolynomial r(a.sig_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (size_t i = 0; i < e.base.size(); ++i) e.base[i] += eb.base[i];
                for (size_t i = 0; i < e.tower.size(); ++i) e.tower[i] += eb.tower[i];
                e.main += eb.main;
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }

    friend SparsePolynomial operator*(const Rat& c, const SparsePolynomial& a) {
        SparsePolynomial r(a.sig_);
        if (c.is_zero()) return r;
        for (const auto& [e, k] : a.terms_) r.terms_.emplace(e, c * k);
        return r;
    }

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }

    SparsePolynomial pow(int e) const {
        if (e < 0) throw SignatureMismatch("negative polynomial power");
        SparsePolynomial r = constant(sig_, Rat(1));
        SparsePolynomial b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }

    int degree_in(VarRef v) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.at(v));
        return d;  // -1 for the zero polynomial
    }

    int degree_in_main() const { return degree_in({VarKind::Main, 0}); }

    bool contains(VarRef v) const {
        for (const auto& [e, c] : terms_)
            if (e.at(v) > 0) return true;
        return false;
    }

    // Coefficient of main^k, as a polynomial with main-exponent zero.
    SparsePolynomial coefficient_of_main(int k) const {
        SparsePolynomial r(sig_);
        for (const auto& [e, c] : terms_) {
            if (e.main != k) continue;
            Exponents q = e;
            q.main = 0;
            r.terms_.emplace(std::move(q), c);
        }
        return r;
    }

    Rat coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Rat constant_term() const { return coefficient(zero_exponents(sig_)); }

    // Replace `var` by `expr`, fully expanded and canonicalized.
    SparsePolynomial substitute(VarRef var, const SparsePolynomial& expr) const {
        if (!(expr.sig_ == sig_)) throw SignatureMismatch("substitute: signature mismatch");
        // Cache powers of expr up to the needed degree.
        int dmax = degree_in(var);
        std::vector<SparsePolynomial> powers;
        powers.push_back(constant(sig_, Rat(1)));
        for (int i = 1; i <= std::max(dmax, 0); ++i) powers.push_back(powers.back() * expr);
        SparsePolynomial r(sig_);
        for (const auto& [e, c] : terms_) {
            Exponents q = e;
            int k = q.at(var);
            q.at(var) = 0;
            r += monomial(sig_, std::move(q), c) * powers[k];
        }
        return r;
    }

    // Re-embed into a wider signature (extra base and/or tower variables).
    SparsePolynomial extend(Signature wider) const {
        if (wider.base < sig_.base || wider.tower < sig_.tower)
            throw SignatureMismatch("extend: narrower signature");
        SparsePolynomial r(wider);
        for (const auto& [e, c] : terms_) {
            Exponents q = zero_exponents(wider);
            std::copy(e.base.begin(), e.base.end(), q.base.begin());
            std::copy(e.tower.begin(), e.tower.end(), q.tower.begin());
            q.main = e.main;
            r.terms_.emplace(std::move(q), c);
        }
        return r;
    }

    // Evaluate at a rational point (base, tower, main in one flat list).
    Rat eval(const std::vector<Rat>& base, const std::vector<Rat>& tower, const Rat& main) const {
        Rat s(0);
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (size_t i = 0; i < e.base.size(); ++i) t *= base[i].pow(e.base[i]);
            for (size_t i = 0; i < e.tower.size(); ++i) t *= tower[i].pow(e.tower[i]);
            t *= main.pow(e.main);
            s += t;
        }
        return s;
    }

private:
    void check_sig(const SparsePolynomial& o) const {
        if (!(sig_ == o.sig_)) throw SignatureMismatch("polynomial signature mismatch");
    }
    void check_exponents(const Exponents& e) const {
        if (static_cast<int>(e.base.size()) != sig_.base ||
            static_cast<int>(e.tower.size()) != sig_.tower)
            throw SignatureMismatch("exponent vector does not match signature");
    }

    Signature sig_;
    std::map<Exponents, Rat> terms_;
};

// Degree n of a Weierstrass (distinguished) polynomial in the main
// variable: monic, and every lower coefficient vanishes at the origin.
inline int weierstrass_validate(const SparsePolynomial& f) {
    if (f.is_zero()) throw NotWeierstrass("zero polynomial");
    int n = f.degree_in_main();
    if (n < 1) throw NotWeierstrass("no main variable");
    SparsePolynomial lead = f.coefficient_of_main(n);
    if (!(lead == SparsePolynomial::constant(f.signature(), Rat(1))))
        throw NotWeierstrass("not monic in the main variable");
    for (const auto& [e, c] : f.terms()) {
        if (e.main == n) continue;
        if (e.total() == e.main)
            throw NotWeierstrass("coefficient of main^" + std::to_string(e.main) +
                                 " does not vanish at the origin");
    }
    return n;
}

}  // namespace quasiord
