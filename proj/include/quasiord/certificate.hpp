#pragma once

#include <optional>
#include <vector>

#include "quasiord/kappa.hpp"

namespace quasiord {

// Joint verdict of the polyhedral construction and the independent
// discriminant test. Both are exact, so agreement is a hard equality.
struct Certificate {
    bool quasi_ordinary = false;                 // polyhedral verdict
    std::optional<std::vector<int>> delta;       // discriminant exponent, if dominant
    Terminal terminal = Terminal::MinusOne;
    bool agreement = false;                      // (terminal == Infinity) == delta.has_value()
    KappaResult kappa;
};

Certificate qo_certificate(const SparsePolynomial& f, const KappaConfig& config = {});

}  // namespace quasiord
