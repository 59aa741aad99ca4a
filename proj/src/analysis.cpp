#include "quasiord/analysis.hpp"

namespace quasiord {

std::vector<FracVector> gamma_to_lambda(const std::vector<FracVector>& gammas,
                                        const std::vector<int>& indices) {
    if (gammas.empty()) return {};
    if (indices.size() < gammas.size())
        throw SignatureMismatch("gamma_to_lambda: index list too short");
    std::vector<FracVector> lambdas{gammas.front()};
    for (size_t i = 1; i < gammas.size(); ++i)
        lambdas.push_back(lambdas.back() + gammas[i] - Rat(indices[i - 1]) * gammas[i - 1]);
    return lambdas;
}

std::vector<FracVector> lambda_to_gamma(const std::vector<FracVector>& lambdas,
                                        const std::vector<int>& indices) {
    if (lambdas.empty()) return {};
    std::vector<FracVector> gammas{lambdas.front()};
    for (size_t i = 1; i < lambdas.size(); ++i)
        gammas.push_back(lambdas[i] - lambdas[i - 1] + Rat(indices[i - 1]) * gammas[i - 1]);
    return gammas;
}

DeformationFamily build_deformation(const CycleState& state) {
    const int g = state.tower.depth();
    if (g == 0 || !state.completed)
        throw NotQuasiOrdinaryState("deformation requires a completed construction");
    const Signature sig{state.d, g};  // main slot holds T
    const VarRef tvar{VarKind::Main, 0};

    // Weight of a monomial in (x, u), used for the overweight inequalities.
    WeightMap wstar = state.tower.weight_map();

    DeformationFamily fam{sig, {}};
    for (int t = 0; t < g; ++t) {
        SparsePolynomial ft(sig);
        if (t + 1 < g) {
            ft += SparsePolynomial::variable(sig, tvar) *
                  SparsePolynomial::variable(sig, {VarKind::Tower, t + 1});
        }
        Exponents upow = zero_exponents(sig);
        upow.tower[t] = state.indices[t];
        ft -= SparsePolynomial::monomial(sig, upow, Rat(1));

        Exponents mono = zero_exponents(sig);
        std::copy(state.monos[t].base.begin(), state.monos[t].base.end(), mono.base.begin());
        std::copy(state.monos[t].tower.begin(), state.monos[t].tower.end(), mono.tower.begin());
        ft += SparsePolynomial::monomial(sig, mono, state.rhos[t]);

        SparsePolynomial tail = state.shifts[t + 1].extend(sig);
        ft -= SparsePolynomial::variable(sig, tvar) * tail;

        // Overweight sanity: the binomial is weight-homogeneous and every
        // tail term sits strictly above it in the product order.
        FracVector base_weight = Rat(state.indices[t]) * state.tower.gamma(t);
        if (!(wstar.weight_of(mono) == base_weight))
            throw NotQuasiOrdinaryState("deformation binomial is not weight-homogeneous");
        for (const auto& [e, c] : tail.terms())
            if (!product_gt(wstar.weight_of(e), base_weight))
                throw NotQuasiOrdinaryState("deformation tail term is not overweight");

        fam.equations.push_back(std::move(ft));
    }
    return fam;
}

SparsePolynomial input_in_minimized_coordinates(const CycleState& state) {
    const SparsePolynomial& f = state.minimized_input;
    if (state.shifts.empty()) return f;
    SparsePolynomial h = state.shifts.front();
    if (h.is_zero()) return f;
    return f.substitute({VarKind::Main, 0},
                        SparsePolynomial::variable(f.signature(), {VarKind::Main, 0}) + h);
}

}  // namespace quasiord
