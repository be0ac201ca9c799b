#include "p6/verify_harness.hpp"

#include <doctest.h>

using namespace p6;

namespace {

const SolutionTrace& default_trace() {
    static const SolutionTrace t = make_test_solution(fixture("default"), 1e-10);
    return t;
}

}  // namespace

TEST_SUITE("verify_harness") {

TEST_CASE("frozen fixtures") {
    REQUIRE(frozen_fixtures().size() == 2);
    const Fixture& d = fixture("default");
    for (const auto& z : d.theta) CHECK(z == Complex(0.5));
    CHECK(d.start == Jet{1.0 / 3, {2.0, 1.0}, 0.0});
    CHECK(d.x_b == Complex(2.0 / 3));
    CHECK_THROWS_AS(fixture("nope"), ParseError);
    const auto& t = default_trace();
    CHECK(t.samples.size() >= 100);
    CHECK(t.samples.size() <= 1000);
    for (const auto& s : t.samples) CHECK(guards_hold(s));
}

TEST_CASE("make_test_solution rejects a path through x = 1") {
    CHECK_THROWS_AS(make_test_solution(CTheta{0.5, 0.5, 0.5, 0.5}, {0.5, 2.0, 0.0}, 1.5, 64, 1e-10),
                    SingularConfiguration);
    auto c = make_test_solution(CTheta{0.0, 0.0, 0.0, 1.0}, {2.0, 5.0, 0.0}, 3.0, 64, 1e-10);
    for (const auto& s : c.samples) CHECK(std::abs(s.u - 5.0) < 1e-10);
}

TEST_CASE("verify_word examples") {
    const Tolerances tol;
    auto sa = verify_word({{"Sa", 1}}, default_trace(), tol);
    CHECK(sa.pass);
    auto src = trace_defects(default_trace().samples, params_from_theta(default_trace().theta));
    CHECK(sa.max_residual == src.max_residual);
    auto cm = verify_word({{"Tcm", 1}}, default_trace(), tol);
    CHECK(cm.pass);
    CHECK(cm.max_residual <= 1e-6);
    CHECK(cm.samples == default_trace().samples.size());
}

TEST_CASE("round trip and cross validation") {
    const Tolerances tol;
    auto rt = verify_round_trip(parse_word("Tcm*Tcm"), default_trace(), tol);
    REQUIRE(rt.max_round_trip_gap);
    CHECK(*rt.max_round_trip_gap <= 1e-9);
    CHECK(rt.pass);
    for (const char* d : {"Tms", "Tnjh"}) {
        auto cv = cross_validate(d, default_trace(), tol);
        REQUIRE(cv.max_cross_gap);
        CHECK(*cv.max_cross_gap <= 1e-8);
        CHECK(cv.pass);
    }
    auto self = compare_routes(parse_word("Tcm*Hbadc"), parse_word("Tcm*Hbadc"), default_trace(), tol);
    CHECK(*self.max_cross_gap == 0.0);
    CHECK_THROWS_AS(cross_validate("Tok", default_trace(), tol), UnknownGenerator);
}

TEST_CASE("tight tolerances expose the finite-difference floor") {
    Tolerances tight;
    tight.residual = 1e-14;
    tight.jet = 1e-14;
    auto r = verify_word({{"Tcm", 1}}, default_trace(), tight);
    CHECK_FALSE(r.pass);
    CHECK(r.diagnostics.find("residual") != std::string::npos);
}

TEST_CASE("settle collects every reason") {
    VerificationReport r;
    r.samples = 3;
    r.max_residual = std::nan("");
    r.max_jet_defect = 1.0;
    r.max_cross_gap = 1.0;
    settle(r, Tolerances{});
    CHECK_FALSE(r.pass);
    CHECK(r.diagnostics.find("fewer than 5 samples") != std::string::npos);
    CHECK(r.diagnostics.find("cross-validation gap") != std::string::npos);
}

TEST_CASE("enumeration of words") {
    auto w = enumerate_words({"a", "b"}, 3);
    CHECK(w.size() == 2 + 4 + 8);
    CHECK(enumerate_words(kEnumerationAlphabet, 4).size() == 8 + 64 + 512 + 4096);
    CHECK(enumerate_words({"a"}, 0).empty());
}

TEST_CASE("audit-only suite") {
    auto res = run_full_suite(audit_only_config());
    CHECK(res.reports.empty());
    CHECK(res.summary.relations == catalog_relations().size());
    CHECK(res.summary.relations_failing.empty());
    CHECK(res.summary.printed_tcm_is_tcm_hbadc);
    CHECK(res.all_pass());
    std::vector<std::string> fy = {"fy-from-ms", "ms-from-fy"};
    CHECK(res.summary.xmap_discrepancies == fy);
}

TEST_CASE("small suite reports skips and failures separately") {
    SuiteConfig c = audit_only_config();
    c.fixtures = {"default"};
    c.words = {"Tcm", "Tcm*Sa", "Tms^-1"};
    auto res = run_full_suite(c);
    CHECK(res.summary.skipped.size() == 1);
    CHECK(res.summary.skipped[0].find("Tcm*Sa") != std::string::npos);
    REQUIRE(res.reports.size() == 2);
    CHECK(res.reports[0].pass);
    CHECK_FALSE(res.reports[1].pass);
    CHECK(res.reports[1].diagnostics.find("direction-unavailable") != std::string::npos);
    CHECK_FALSE(res.all_pass());
}

}  // TEST_SUITE
