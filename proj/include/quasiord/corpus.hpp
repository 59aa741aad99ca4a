#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "quasiord/parser.hpp"
#include "quasiord/polynomial.hpp"

namespace quasiord {

// Labeled test instance. Quasi-ordinary instances come from the tower
// recursion q_j = q_{j-1}^{n_j} - rho_j x^a q^b + overweight tail, so the
// label is ground truth independent of both the engine and the oracle;
// non-quasi-ordinary instances are built so that no admissible coordinate
// change can merge their incomparable vertices.
struct CorpusInstance {
    VarDecl decl;
    SparsePolynomial f;
    bool expect_qo = false;
    std::string recipe;
};

std::vector<CorpusInstance> generate_corpus(int count, std::uint64_t seed);

struct CorpusOutcome {
    bool engine_qo = false;
    bool oracle_qo = false;
    bool agree = false;
    bool label_match = false;
    std::string recipe;
};

CorpusOutcome evaluate_instance(const CorpusInstance& inst);

// Full harness: per-instance agreement table plus a summary.
nlohmann::json corpus_report(int count, std::uint64_t seed);

}  // namespace quasiord
