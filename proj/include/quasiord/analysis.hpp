#pragma once

#include <vector>

#include "quasiord/kappa.hpp"

namespace quasiord {

// Characteristic exponents from the semigroup generators:
// lambda_1 = gamma_1, lambda_{i+1} = lambda_i + gamma_{i+1} - n_i * gamma_i.
std::vector<FracVector> gamma_to_lambda(const std::vector<FracVector>& gammas,
                                        const std::vector<int>& indices);

// Inverse recursion; gamma_to_lambda and lambda_to_gamma are mutually inverse.
std::vector<FracVector> lambda_to_gamma(const std::vector<FracVector>& lambdas,
                                        const std::vector<int>& indices);

// The one-parameter family interpolating between the binomial toric equations
// (T = 0) and the tower relations (T = 1). Variables are (x, u_0..u_{g-1})
// with T in the main slot.
struct DeformationFamily {
    Signature signature;
    std::vector<SparsePolynomial> equations;  // F_0..F_{g-1}
};

DeformationFamily build_deformation(const CycleState& state);

// Restores the polynomial the construction actually analyzed, expressed in
// the minimized base coordinates with the original main variable: undoes the
// first-cycle main shift (but not the base changes).
SparsePolynomial input_in_minimized_coordinates(const CycleState& state);

}  // namespace quasiord
