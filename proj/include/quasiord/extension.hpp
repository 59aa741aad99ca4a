#pragma once

#include <map>
#include <string>
#include <vector>

#include "quasiord/rational.hpp"

namespace quasiord {

// Element of a quotient tower Q[y_0]/(m_0) [y_1]/(m_1) ... : reduced
// polynomial expression in the generators, exponent of y_i below deg(m_i).
struct Elem {
    std::map<std::vector<int>, Rat> terms;

    bool is_zero() const { return terms.empty(); }
};

// Tower of successive quotient extensions. Arithmetic reduces level by
// level; inversion runs the extended Euclidean algorithm and reports a
// non-irreducible modulus instead of factoring it.
class ExtensionTower {
public:
    struct Level {
        std::string name;
        int degree;
        std::vector<Elem> modulus_tail;  // modulus = y^degree + sum tail[i] y^i
        int cyclotomic_order = 0;        // m > 0 when the generator is a primitive m-th root
    };

    int depth() const { return static_cast<int>(levels_.size()); }
    const Level& level(int i) const { return levels_[i]; }

    Elem from_rat(const Rat& c) const;
    Elem gen(int i) const;
    // Generator of a primitive m-th root of unity, adjoining Phi_m if needed.
    // For m <= 2 no extension is made and the rational value is returned.
    Elem root_of_unity(int m, int power);
    // Adjoins y with y^n = base (no simplification attempted).
    Elem adjoin_radical(const std::string& name, int n, const Elem& base);

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul(const Rat& c, const Elem& a) const;
    Elem pow(const Elem& a, int e) const;
    // Extended-gcd inversion; ZeroDivisorInExtension when a modulus is not
    // irreducible over the subtower (the offending factor is reported).
    Elem inverse(const Elem& a) const;
    bool equal(const Elem& a, const Elem& b) const;
    bool is_rational(const Elem& a) const;
    Rat rat_value(const Elem& a) const;  // requires is_rational

    std::string to_string(const Elem& a) const;

private:
    Elem reduce(Elem a) const;
    // View a as a polynomial in the top generator of `level` with
    // coefficients in the subtower.
    std::vector<Elem> as_univar(const Elem& a, int level) const;
    Elem inverse_at(const Elem& a, int level) const;

    std::vector<Level> levels_;
    std::map<int, int> cyclotomic_;  // order -> generator index
};

}  // namespace quasiord
