#pragma once

#include <optional>
#include <vector>

#include "quasiord/fracvec.hpp"
#include "quasiord/polynomial.hpp"
#include "quasiord/weights.hpp"

namespace quasiord {

// Rewriting rule u_level^power = rhs. The rhs lives over the full current
// signature: it mentions x, u_0..u_{level+1} (the next tower variable enters
// linearly) or the main variable while the next level is still open, and its
// u_level-degree is < power.
struct TowerRelation {
    int level = 0;
    int power = 0;
    SparsePolynomial rhs;
};

// The embedding tower: u_0..u_{t-1} with bounds n_1..n_t and weights
// gamma_1..gamma_t over d base variables. Rewriting by the relations
// terminates (each step strictly lowers the grading by unfolded degree) and
// normal forms have u_j-degree < n_{j+1} at every level.
class RingTower {
public:
    explicit RingTower(int base_dim) : d_(base_dim) {}

    int base_dim() const { return d_; }
    int depth() const { return static_cast<int>(relations_.size()); }
    int bound(int level) const { return relations_[level].power; }
    const TowerRelation& relation(int level) const { return relations_[level]; }
    const std::vector<FracVector>& gammas() const { return gammas_; }
    const FracVector& gamma(int level) const { return gammas_[level]; }

    Signature signature() const { return Signature{d_, depth()}; }

    // Weight map (Id_d | gamma_1 | ... | gamma_t).
    WeightMap weight_map() const {
        WeightMap w = WeightMap::identity(d_);
        for (const auto& g : gammas_) w = w.extend(g);
        return w;
    }

    void push_level(TowerRelation rel, FracVector gamma) {
        relations_.push_back(std::move(rel));
        gammas_.push_back(std::move(gamma));
    }

    // Replace the relation rhs at `level` (used when the open main variable
    // is shifted or committed to a tower variable).
    void set_relation_rhs(int level, SparsePolynomial rhs) {
        relations_[level].rhs = std::move(rhs);
    }

private:
    int d_;
    std::vector<TowerRelation> relations_;
    std::vector<FracVector> gammas_;
};

// Unique representative with u_j-degree < n_{j+1} for every level.
SparsePolynomial normalize_tower(const SparsePolynomial& p, const RingTower& tower);

// The unique restricted monomial x^A u^B (0 <= B_j < n_{j+1}) of weight
// lambda, found digit-wise from the top level down. nullopt when the final
// remainder is not a nonnegative integer vector; AmbiguousWeight when a digit
// is not unique (the lattice extension at that level is not strict).
std::optional<Exponents> monomial_of_weight(const FracVector& lambda, const RingTower& tower);

}  // namespace quasiord
