#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "quasiord/errors.hpp"

namespace quasiord {

using Int = mpz_class;

// Exact rational number. Thin wrapper over mpq_class that keeps the value
// canonical (gcd(num, den) = 1, den > 0) and fixes the textual form "p/q"
// (just "p" when q = 1), which is reused verbatim by the CLI JSON output.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors int literals
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw ZeroPolynomial("rational with zero denominator");
        v_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    static Rat parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw SyntaxError("bad rational literal '" + s + "'");
        q.canonicalize();
        Rat r;
        r.v_ = q;
        return r;
    }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonneg() const { return v_ >= 0; }
    int sign() const { return sgn(v_); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw ZeroPolynomial("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { Rat r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { Rat r; r.v_ = ::abs(v_); return r; }

    Rat pow(long e) const {
        if (e < 0) {
            Rat inv = Rat(1) / *this;
            return inv.pow(-e);
        }
        Rat r(1), b(*this);
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    double to_double() const { return v_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.str();
    }

private:
    mpq_class v_;
};

// Exact k-th root of a rational, when one exists in Q.
inline std::optional<Rat> rational_root(const Rat& a, long k) {
    if (k <= 0) return std::nullopt;
    if (k == 1) return a;
    if (a.is_zero()) return Rat(0);
    bool neg = a.sign() < 0;
    if (neg && k % 2 == 0) return std::nullopt;
    Int n = abs(a.num()), d = a.den();
    Int rn, rd;
    if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k)) == 0)
        return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(k)) == 0)
        return std::nullopt;
    Rat r(neg ? Int(-rn) : rn, rd);
    return r;
}

inline Int lcm_den(const Int& acc, const Rat& r) { return lcm(acc, r.den()); }

}  // namespace quasiord
