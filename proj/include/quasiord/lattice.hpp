#pragma once

#include <vector>

#include "quasiord/fracvec.hpp"
#include "quasiord/rational.hpp"

namespace quasiord {

// Column-style Hermite normal form of an integer matrix (d rows, >= d
// columns, full row rank). Returns the d x d lower-triangular basis with
// positive diagonal.
std::vector<std::vector<Int>> hermite_basis(std::vector<std::vector<Int>> cols, int d);

// Exact decision of v in Z^d + Z*g_1 + ... + Z*g_k: clear denominators to a
// common scale, reduce to Hermite form, test divisibility.
bool lattice_membership(const FracVector& v, const std::vector<FracVector>& generators);

// Indices [M_i : M_{i-1}] of the chain M_0 = Z^d, M_i = M_{i-1} + Z*g_i,
// via determinant ratios of the Hermite bases at a common scale.
// DegenerateLattice if some g_i already lies in M_{i-1}.
std::vector<int> lattice_indices(const std::vector<FracVector>& gammas);

}  // namespace quasiord
