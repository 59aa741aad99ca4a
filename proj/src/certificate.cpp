#include "quasiord/certificate.hpp"

#include "quasiord/discriminant.hpp"

namespace quasiord {

Certificate qo_certificate(const SparsePolynomial& f, const KappaConfig& config) {
    Certificate cert;
    cert.kappa = run_construction(f, config);
    cert.terminal = cert.kappa.terminal;
    cert.quasi_ordinary = cert.kappa.quasi_ordinary();
    cert.delta = dominance_test(discriminant_main(f));
    cert.agreement = cert.quasi_ordinary == cert.delta.has_value();
    return cert;
}

}  // namespace quasiord
