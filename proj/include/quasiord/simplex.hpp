#pragma once

#include <vector>

#include "quasiord/fracvec.hpp"

namespace quasiord {

// Exact rational feasibility test: is p expressible as sum(lambda_i * q_i) + r
// with lambda_i >= 0, sum(lambda_i) = 1, r >= 0? Equivalently, does p lie in
// conv(points) + Q^c_{>=0}. Phase-1 simplex with Bland's rule; instances here
// are tiny (tens of points, c <= 4).
bool in_hull_plus_orthant(const FracVector& p, const std::vector<FracVector>& points);

}  // namespace quasiord
