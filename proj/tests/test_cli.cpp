#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quasiord/corpus.hpp"
#include "quasiord/parser.hpp"
#include "quasiord/report.hpp"
#include "test_util.hpp"

using namespace quasiord;

namespace {

const VarDecl kDecl3{{"x1", "x2", "x3"}, "z"};
const VarDecl kDecl1{{"x"}, "z"};

SparsePolynomial mono(Signature sig, std::vector<int> base, int main, Rat c = Rat(1)) {
    return SparsePolynomial::monomial(sig, Exponents{std::move(base), {}, main}, c);
}

}  // namespace

TEST_CASE("parser: fixed expressions") {
    auto f = parse_polynomial("(z^2 - x1*x2*x3)^3 - x1^6*x2^7*x3^3*z", kDecl3);
    Signature sig{3, 0};
    auto expect =
        (mono(sig, {0, 0, 0}, 2) - mono(sig, {1, 1, 1}, 0)).pow(3) - mono(sig, {6, 7, 3}, 1);
    CHECK(f == expect);

    auto z = parse_polynomial("z", kDecl3);
    CHECK(z == SparsePolynomial::variable(sig, {VarKind::Main, 0}));

    Signature s1{1, 0};
    auto g = parse_polynomial("1/2*z^2 + z^3", kDecl1);
    CHECK(g == mono(s1, {0}, 2, Rat(1, 2)) + mono(s1, {0}, 3));
    CHECK_THROWS_AS(weierstrass_validate(g), NotWeierstrass);
}

TEST_CASE("parser: errors carry position") {
    CHECK_THROWS_AS(parse_polynomial("z +", kDecl1), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("z + y", kDecl1), UnknownVariable);
    CHECK_THROWS_AS(parse_polynomial("z z", kDecl1), SyntaxError);
    try {
        parse_polynomial("z^2 +\n qq", kDecl1);
        CHECK(false);
    } catch (const UnknownVariable& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    VarDecl bad{{"x", "x"}, "z"};
    CHECK_THROWS_AS(parse_polynomial("z", bad), SyntaxError);
    VarDecl reserved{{"u0"}, "z"};
    CHECK_THROWS_AS(parse_polynomial("z", reserved), SyntaxError);
}

TEST_CASE("parse-render round trip on random polynomials") {
    testutil::Rng rng(90210);
    for (int i = 0; i < 250; ++i) {
        int d = testutil::uniform(rng, 1, 3);
        VarDecl decl;
        for (int k = 1; k <= d; ++k) decl.base.push_back("x" + std::to_string(k));
        decl.main = "z";
        auto f = testutil::random_polynomial(rng, Signature{d, 0}, 7, 4, 4);
        CHECK(parse_polynomial(render(f, decl), decl) == f);
    }
}

TEST_CASE("report determinism") {
    InputSpec spec;
    spec.decl = kDecl3;
    spec.poly_text = "(z^2 - x1*x2*x3)^3 - x1^6*x2^7*x3^3*z";
    spec.subcommand = "certify";
    spec.timings = false;
    auto a = run_report(spec);
    auto b = run_report(spec);
    CHECK(a.dump() == b.dump());
    CHECK(a["quasi_ordinary"] == true);
    CHECK(a["agreement"] == true);
    CHECK(a["kappa"]["terminal"] == "infinity");
    CHECK(a["data"]["n"] == 6);
    CHECK(!a.contains("timings"));

    spec.timings = true;
    CHECK(run_report(spec).contains("timings"));
}

TEST_CASE("report on a minus-one run") {
    InputSpec spec;
    spec.decl = VarDecl{{"x1", "x2"}, "z"};
    spec.poly_text = "x1^2 + z^3 + z^2*x2";
    spec.subcommand = "kappa";
    spec.timings = false;
    auto rep = run_report(spec);
    CHECK(rep["kappa"]["terminal"] == "minus_one");
    CHECK(rep["quasi_ordinary"] == false);
    CHECK(!rep["diagnostics"].empty());
    CHECK(!rep.contains("error"));

    // permuted projection: the base change is found automatically
    spec.poly_text = "z^2 + x1^3 + x1^2*x2";
    spec.subcommand = "certify";
    auto rep2 = run_report(spec);
    CHECK(rep2["kappa"]["terminal"] == "infinity");
    CHECK(rep2["kappa"]["vertices"][0] == nlohmann::json::array({"1", "1/2"}));
    CHECK(rep2["changes"]["base_shifts"].size() == 1);
}

TEST_CASE("report mirrors structured errors") {
    InputSpec spec;
    spec.decl = kDecl1;
    spec.poly_text = "x*z^2 + z";
    spec.subcommand = "kappa";
    spec.timings = false;
    auto rep = run_report(spec);
    REQUIRE(rep.contains("error"));
    CHECK(rep["error"]["code"] == "NotWeierstrass");

    spec.poly_text = "z + ??";
    auto rep2 = run_report(spec);
    REQUIRE(rep2.contains("error"));
    CHECK(rep2["error"]["code"] == "SyntaxError");
}

TEST_CASE("roots subcommand emits a verified series") {
    InputSpec spec;
    spec.decl = VarDecl{{"x1", "x2"}, "z"};
    spec.poly_text = "z^2 - x1*x2";
    spec.subcommand = "roots";
    spec.eta = {1};
    spec.timings = false;
    auto rep = run_report(spec);
    REQUIRE(!rep.contains("error"));
    auto roots = rep["data"]["roots"];
    CHECK(roots["residual_pass"] == true);
    REQUIRE(roots["series"].size() == 1);
    CHECK(roots["series"][0]["coefficient"] == "-1");
    CHECK(roots["series"][0]["exponent"] == nlohmann::json::array({"1/2", "1/2"}));
}

TEST_CASE("corpus harness agrees on a small deterministic batch") {
    auto rep = corpus_report(25, 20240917);
    CHECK(rep["summary"]["all_agree"] == true);
    CHECK(rep["summary"]["label_matches"] == 25);
    // determinism of the generator
    auto rep2 = corpus_report(25, 20240917);
    CHECK(rep["instances"] == rep2["instances"]);
}
