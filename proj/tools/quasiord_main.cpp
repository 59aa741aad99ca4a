#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "quasiord/corpus.hpp"
#include "quasiord/report.hpp"

namespace {

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<int> split_ints(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

struct CommonOpts {
    std::string vars = "x1,x2";
    std::string main = "z";
    std::string poly;
    std::string file;
    int base_budget = 16;
    bool json = false;
    bool no_timings = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--vars", o.vars, "comma-separated base variables, projection order");
    cmd->add_option("--main", o.main, "main variable");
    cmd->add_option("--poly", o.poly, "polynomial expression");
    cmd->add_option("--file", o.file, "read the polynomial from a file");
    cmd->add_option("--base-budget", o.base_budget, "first-cycle base-change budget");
    cmd->add_flag("--json", o.json, "emit the full JSON report");
    cmd->add_flag("--no-timings", o.no_timings, "omit timings for reproducible output");
}

std::string read_poly(const CommonOpts& o) {
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) throw CLI::ValidationError("--file", "cannot open " + o.file);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return o.poly;
}

int emit(const nlohmann::json& rep, bool as_json) {
    if (as_json) {
        std::cout << rep.dump(2) << "\n";
    } else {
        if (rep.contains("error")) {
            std::cout << "error: " << rep["error"]["message"].get<std::string>() << "\n";
            return 1;
        }
        std::cout << "kappa terminal: " << rep["kappa"]["terminal"].get<std::string>() << "\n";
        std::cout << "vertices:";
        for (const auto& v : rep["kappa"]["vertices"]) {
            std::cout << " (";
            for (size_t i = 0; i < v.size(); ++i)
                std::cout << (i ? "," : "") << v[i].get<std::string>();
            std::cout << ")";
        }
        std::cout << "\n";
        std::cout << "quasi_ordinary: " << (rep["quasi_ordinary"].get<bool>() ? "true" : "false")
                  << "\n";
        if (rep.contains("agreement"))
            std::cout << "oracle agreement: "
                      << (rep["agreement"].get<bool>() ? "true" : "false") << "\n";
        for (const auto& d : rep["diagnostics"])
            std::cout << "diagnostic: " << d["code"].get<std::string>() << ": "
                      << d["detail"].get<std::string>() << "\n";
        for (const auto& r : rep["data"]["approximate_roots"])
            std::cout << "approximate root: " << r.get<std::string>() << "\n";
    }
    if (rep.contains("error")) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasiord: polyhedral detection of quasi-ordinary singularities"};
    app.require_subcommand(1);

    CommonOpts kappa_o, certify_o, roots_o, deform_o;
    int root_bound = 0;
    std::string eta_csv;

    auto* kappa_cmd = app.add_subcommand("kappa", "compute the polyhedral invariant");
    add_common(kappa_cmd, kappa_o);
    auto* certify_cmd =
        app.add_subcommand("certify", "invariant plus the independent discriminant check");
    add_common(certify_cmd, certify_o);
    auto* roots_cmd = app.add_subcommand("roots", "expand a fractional-power-series root");
    add_common(roots_cmd, roots_o);
    roots_cmd->add_option("--root-bound", root_bound, "graded truncation (s-scale)");
    roots_cmd->add_option("--eta", eta_csv, "comma-separated root-of-unity choices");
    auto* deform_cmd = app.add_subcommand("deformation", "emit the overweight deformation");
    add_common(deform_cmd, deform_o);

    auto* corpus_cmd = app.add_subcommand("corpus", "generated agreement harness");
    int count = 50;
    std::uint64_t seed = 7;
    bool corpus_json = false;
    corpus_cmd->add_option("--count", count, "number of instances");
    corpus_cmd->add_option("--seed", seed, "generator seed");
    corpus_cmd->add_flag("--json", corpus_json, "emit the full JSON table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (corpus_cmd->parsed()) {
            auto rep = quasiord::corpus_report(count, seed);
            if (corpus_json) {
                std::cout << rep.dump(2) << "\n";
            } else {
                for (const auto& row : rep["instances"])
                    std::cout << row["index"].get<int>() << "  "
                              << (row["agree"].get<bool>() ? "agree   " : "DISAGREE") << "  "
                              << row["recipe"].get<std::string>() << "  "
                              << row["poly"].get<std::string>() << "\n";
                std::cout << "agreements: " << rep["summary"]["agreements"].get<int>() << "/"
                          << rep["instances"].size() << "\n";
            }
            return rep["summary"]["all_agree"].get<bool>() ? 0 : 1;
        }

        quasiord::InputSpec spec;
        CommonOpts* o = nullptr;
        if (kappa_cmd->parsed()) {
            o = &kappa_o;
            spec.subcommand = "kappa";
        } else if (certify_cmd->parsed()) {
            o = &certify_o;
            spec.subcommand = "certify";
        } else if (roots_cmd->parsed()) {
            o = &roots_o;
            spec.subcommand = "roots";
            if (root_bound > 0) spec.root_bound = root_bound;
            if (!eta_csv.empty()) spec.eta = split_ints(eta_csv);
        } else {
            o = &deform_o;
            spec.subcommand = "deformation";
        }
        spec.decl.base = split_names(o->vars);
        spec.decl.main = o->main;
        spec.poly_text = read_poly(*o);
        spec.base_budget = o->base_budget;
        spec.timings = !o->no_timings;

        auto rep = quasiord::run_report(spec);
        return emit(rep, o->json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
