#pragma once

#include <string>
#include <vector>

#include "quasiord/rational.hpp"

namespace quasiord {

// A point of Q^c. Vertices, weights and exponent values all live here.
using FracVector = std::vector<Rat>;

enum class Cmp { Less, Greater, Equal, Incomparable };

// Component-wise (product) order on Q^c.
inline Cmp product_compare(const FracVector& v, const FracVector& w) {
    if (v.size() != w.size())
        throw SignatureMismatch("product_compare: length mismatch");
    bool le = true, ge = true;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < w[i]) ge = false;
        if (v[i] > w[i]) le = false;
    }
    if (le && ge) return Cmp::Equal;
    if (le) return Cmp::Less;
    if (ge) return Cmp::Greater;
    return Cmp::Incomparable;
}

inline bool product_le(const FracVector& v, const FracVector& w) {
    Cmp c = product_compare(v, w);
    return c == Cmp::Less || c == Cmp::Equal;
}

// v > w in the product order: v ∈ w + Q^c_{>=0} and v != w.
inline bool product_gt(const FracVector& v, const FracVector& w) {
    return product_compare(v, w) == Cmp::Greater;
}

// Total order used for all vertex scans and tie-breaking.
inline bool lex_less(const FracVector& v, const FracVector& w) {
    for (size_t i = 0; i < v.size() && i < w.size(); ++i) {
        if (v[i] < w[i]) return true;
        if (v[i] > w[i]) return false;
    }
    return v.size() < w.size();
}

inline FracVector operator+(const FracVector& a, const FracVector& b) {
    if (a.size() != b.size()) throw SignatureMismatch("FracVector +");
    FracVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline FracVector operator-(const FracVector& a, const FracVector& b) {
    if (a.size() != b.size()) throw SignatureMismatch("FracVector -");
    FracVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline FracVector operator*(const Rat& c, const FracVector& a) {
    FracVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const FracVector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline bool is_nonneg(const FracVector& v) {
    for (const auto& x : v)
        if (x.sign() < 0) return false;
    return true;
}

inline bool is_integral(const FracVector& v) {
    for (const auto& x : v)
        if (!x.is_integer()) return false;
    return true;
}

// |v|_1 for nonnegative v; the grading used for series truncation.
inline Rat grade(const FracVector& v) {
    Rat s(0);
    for (const auto& x : v) s += x;
    return s;
}

inline std::string to_string(const FracVector& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

}  // namespace quasiord
