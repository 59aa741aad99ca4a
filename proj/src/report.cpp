#include "quasiord/report.hpp"

#include <chrono>

#include "quasiord/analysis.hpp"
#include "quasiord/certificate.hpp"
#include "quasiord/discriminant.hpp"
#include "quasiord/roots.hpp"

namespace quasiord {

namespace {

using nlohmann::json;

json frac_vector(const FracVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

json int_vector(const std::vector<int>& v) {
    json a = json::array();
    for (int x : v) a.push_back(x);
    return a;
}

std::string shift_target(const VarDecl& decl, const ChangeRecord& rec) {
    return rec.kind == ChangeRecord::Kind::MainShift ? decl.main : decl.base[rec.base_index];
}

json changes_block(const VarDecl& decl, const KappaResult& res) {
    json out;
    out["main_shift"] =
        res.state.shifts.empty() ? "0" : render(res.state.shifts.front(), decl);
    json shifts = json::array();
    for (const auto& rec : res.state.base_changes) {
        if (rec.kind != ChangeRecord::Kind::BaseShift) continue;
        const std::string var = shift_target(decl, rec);
        shifts.push_back(var + " -> " + var + " + " + render(rec.shift, decl));
    }
    out["base_shifts"] = shifts;
    return out;
}

json data_block(const VarDecl& decl, const KappaResult& res) {
    const CycleState& st = res.state;
    json data;
    data["n"] = st.n;
    data["n_i"] = int_vector(st.indices);
    data["e_i"] = int_vector(st.degrees);

    json gamma = json::array();
    for (const auto& v : res.vertices) gamma.push_back(frac_vector(v));
    data["gamma"] = gamma;
    data["semigroup_generators"] = gamma;

    if (res.quasi_ordinary() && !res.vertices.empty()) {
        json lambda = json::array();
        for (const auto& v : gamma_to_lambda(st.tower.gammas(), st.indices))
            lambda.push_back(frac_vector(v));
        data["lambda"] = lambda;
    } else {
        data["lambda"] = json::array();
    }

    json roots = json::array();
    if (res.quasi_ordinary() && st.completed)
        for (const auto& q : unfold_to_base(st)) roots.push_back(render(q, decl));
    data["approximate_roots"] = roots;

    json def = json::array();
    if (res.quasi_ordinary() && st.completed && st.tower.depth() > 0) {
        DeformationFamily fam = build_deformation(st);
        VarDecl def_decl = decl;
        def_decl.main = "T";
        for (size_t t = 0; t < fam.equations.size(); ++t)
            def.push_back("F_" + std::to_string(t) + " = " +
                          render(fam.equations[t], def_decl));
    }
    data["deformation"] = def;
    data["discriminant_delta"] = nullptr;
    return data;
}

json root_block(const VarDecl& decl, const CycleState& st, const std::vector<int>& eta,
                int bound) {
    json out;
    out["eta"] = int_vector(eta);
    out["bound"] = bound;
    RootSeries zeta = expand_root(st, eta, bound);
    json terms = json::array();
    for (const auto& [k, v] : zeta.terms) {
        json term;
        FracVector xexp(k.size());
        for (size_t i = 0; i < k.size(); ++i) xexp[i] = Rat(k[i], zeta.n);
        term["exponent"] = frac_vector(xexp);
        term["coefficient"] = zeta.tower->to_string(v);
        terms.push_back(term);
    }
    out["series"] = terms;
    SparsePolynomial g = input_in_minimized_coordinates(st);
    out["residual_pass"] = verify_root(g, zeta, bound).pass;
    (void)decl;
    return out;
}

}  // namespace

json run_report(const InputSpec& spec) {
    json out;
    out["input"] = {{"vars", spec.decl.base},
                    {"main", spec.decl.main},
                    {"poly", spec.poly_text},
                    {"subcommand", spec.subcommand}};
    auto started = std::chrono::steady_clock::now();
    try {
        SparsePolynomial f = parse_polynomial(spec.poly_text, spec.decl);
        KappaConfig config{.base_budget = spec.base_budget};

        KappaResult res;
        std::optional<std::vector<int>> delta;
        bool have_delta = false;
        if (spec.subcommand == "certify") {
            Certificate cert = qo_certificate(f, config);
            res = std::move(cert.kappa);
            delta = cert.delta;
            have_delta = true;
            out["agreement"] = cert.agreement;
        } else {
            res = run_construction(f, config);
        }

        json kap;
        json verts = json::array();
        for (const auto& v : res.vertices) verts.push_back(frac_vector(v));
        kap["vertices"] = verts;
        kap["terminal"] = res.terminal == Terminal::Infinity ? "infinity" : "minus_one";
        out["kappa"] = kap;
        out["quasi_ordinary"] = res.quasi_ordinary();

        json diags = json::array();
        for (const auto& dg : res.diagnostics)
            diags.push_back({{"code", dg.code}, {"detail", dg.detail}});
        out["diagnostics"] = diags;

        out["changes"] = changes_block(spec.decl, res);
        json data = data_block(spec.decl, res);
        if (have_delta) {
            if (delta) {
                json dj = json::array();
                for (int x : *delta) dj.push_back(std::to_string(x));
                data["discriminant_delta"] = dj;
            } else {
                data["discriminant_delta"] = nullptr;
            }
        }

        if (spec.subcommand == "roots") {
            if (!res.quasi_ordinary())
                throw NotQuasiOrdinaryState("roots are only expanded on a terminal-infinity run");
            std::vector<int> eta = spec.eta;
            eta.resize(res.state.tower.depth(), 0);
            int bound = spec.root_bound.value_or(default_root_bound(res.state));
            data["roots"] = root_block(spec.decl, res.state, eta, bound);
        }
        out["data"] = data;
    } catch (const Error& e) {
        out["error"] = {{"code", e.code()}, {"message", e.what()}};
    }
    if (spec.timings) {
        auto elapsed = std::chrono::steady_clock::now() - started;
        out["timings"] = {
            {"total_ms",
             std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};
    }
    return out;
}

}  // namespace quasiord
