#include "quasiord/tower.hpp"

#include "quasiord/lattice.hpp"

namespace quasiord {

SparsePolynomial normalize_tower(const SparsePolynomial& p, const RingTower& tower) {
    if (tower.depth() == 0) return p;
    SparsePolynomial cur = p;
    while (true) {
        // Find an offending term; highest tower level first.
        const Exponents* bad = nullptr;
        int bad_level = -1;
        for (int level = tower.depth() - 1; level >= 0 && !bad; --level) {
            for (const auto& [e, c] : cur.terms()) {
                if (e.tower[level] >= tower.bound(level)) {
                    bad = &e;
                    bad_level = level;
                    break;
                }
            }
        }
        if (!bad) return cur;

        const TowerRelation& rel = tower.relation(bad_level);
        SparsePolynomial rhs = rel.rhs.signature() == cur.signature()
                                   ? rel.rhs
                                   : rel.rhs.extend(cur.signature());
        Exponents rest = *bad;
        rest.tower[bad_level] -= rel.power;
        Rat coeff = cur.coefficient(*bad);
        cur += SparsePolynomial::monomial(cur.signature(), *bad, -coeff);  // drop the term
        cur += SparsePolynomial::monomial(cur.signature(), std::move(rest), coeff) * rhs;
    }
}

std::optional<Exponents> monomial_of_weight(const FracVector& lambda, const RingTower& tower) {
    FracVector rem = lambda;
    std::vector<int> digits(tower.depth(), 0);
    for (int level = tower.depth() - 1; level >= 0; --level) {
        std::vector<FracVector> sub(tower.gammas().begin(), tower.gammas().begin() + level);
        int found = -1;
        for (int b = 0; b < tower.bound(level); ++b) {
            FracVector cand = rem - Rat(b) * tower.gamma(level);
            if (lattice_membership(cand, sub)) {
                if (found >= 0)
                    throw AmbiguousWeight(
                        "monomial_of_weight: digit at level " + std::to_string(level) +
                        " is not unique (lattice extension not strict)");
                found = b;
            }
        }
        if (found < 0) return std::nullopt;
        digits[level] = found;
        rem = rem - Rat(found) * tower.gamma(level);
    }
    Exponents e = zero_exponents(tower.signature());
    for (size_t i = 0; i < rem.size(); ++i) {
        if (!rem[i].is_integer() || rem[i].sign() < 0) return std::nullopt;
        e.base[i] = static_cast<int>(rem[i].num().get_si());
    }
    e.tower = digits;
    return e;
}

}  // namespace quasiord
