#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quasiord/parser.hpp"

namespace quasiord {

// One CLI invocation: the declared projection, the polynomial text, and the
// options of the requested subcommand.
struct InputSpec {
    VarDecl decl;
    std::string poly_text;
    std::string subcommand = "certify";  // kappa | certify | roots | deformation
    int base_budget = 16;
    std::optional<int> root_bound;
    std::vector<int> eta;  // one entry per cycle; missing entries default to 0
    bool timings = true;
};

// Runs the requested analysis and serializes the full report. Errors are
// mirrored into an "error" object instead of escaping; identical inputs give
// byte-identical JSON when timings are disabled.
nlohmann::json run_report(const InputSpec& spec);

}  // namespace quasiord
