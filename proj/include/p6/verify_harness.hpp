#pragma once

#include "p6/birational_jets.hpp"
#include "p6/pvi_core.hpp"
#include "p6/theta_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace p6 {

struct Tolerances {
    double integration = 1e-10;
    double jet = 1e-6;
    double residual = 1e-6;
    double round_trip = 1e-9;
    double cross = 1e-8;
};

struct Fixture {
    std::string name;
    CTheta theta;
    Jet start;
    Complex x_b;
    std::size_t n_min = 512;
};

// "default": Θ = (1/2,1/2,1/2,1/2); "generic": an asymmetric complex Θ that
// separates every permutation and sign pattern. Both start at x = 1/3,
// u = 2+i, u′ = 0 and run to x = 2/3 without meeting a pole.
const std::vector<Fixture>& frozen_fixtures();
const Fixture& fixture(const std::string& name);

SolutionTrace make_test_solution(const CTheta& theta, const Jet& start, Complex x_b,
                                 std::size_t n_min, double tol);
SolutionTrace make_test_solution(const Fixture& f, double tol);

struct VerificationReport {
    std::string name;
    std::string kind;  // "word", "round-trip" or "cross-validation"
    std::string fixture;
    CTheta source_theta{};
    CTheta image_theta{};
    Complex x_a, x_b;
    std::size_t samples = 0;
    double max_residual = 0;
    double max_jet_defect = 0;
    std::optional<double> max_round_trip_gap;
    std::optional<double> max_cross_gap;
    bool pass = false;
    std::string diagnostics;
};

// Recomputes pass from the recorded maxima.
void settle(VerificationReport& r, const Tolerances& tol);

VerificationReport verify_word(const Word& w, const SolutionTrace& trace, const Tolerances& tol,
                               Convention c = Convention::LeftAppliedLast,
                               const std::string& fixture_name = "");

// Pushes through `w` and compares with the source trace sample by sample.
VerificationReport verify_round_trip(const Word& w, const SolutionTrace& trace,
                                     const Tolerances& tol, const std::string& fixture_name = "");

// Maximum relative gap between the images of two routes.
VerificationReport compare_routes(const Word& direct, const Word& route, const SolutionTrace& trace,
                                  const Tolerances& tol, const std::string& fixture_name = "");

// "Tms" against Habdc*Hdcba*(Tcm*Hbadc*Sa*Sd)^2*Habdc; "Tnjh" (old → new) against
// Hbadc*Tcm*Hadcb, the inverse of Hadcb*Tcm*Hbadc.
VerificationReport cross_validate(const std::string& direct, const SolutionTrace& trace,
                                  const Tolerances& tol, const std::string& fixture_name = "");

struct SuiteConfig {
    Tolerances tol;
    std::vector<std::string> fixtures{"default", "generic"};
    std::vector<std::string> words;  // explicit words checked on every fixture
    int enumerate_length = 4;        // all words up to this length over kEnumerationAlphabet
    bool round_trips = true;
    bool cross_validations = true;
    Scope audit_scope = Scope::Full;
};

inline const std::vector<std::string> kEnumerationAlphabet{"Tcm", "Sa",    "Sb",    "Sc",
                                                           "Sd",  "Hbadc", "Hdcba", "Hcdab"};

SuiteConfig default_suite_config();
// Audit only: no fixtures are integrated.
SuiteConfig audit_only_config();

struct SuiteSummary {
    std::size_t relations = 0;
    std::vector<std::string> relations_failing;  // fail under both conventions
    std::vector<std::string> xmap_discrepancies;
    bool printed_tcm_is_tcm_hbadc = false;
    std::size_t reports = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> skipped;  // "fixture: word (reason)"
};

struct SuiteResult {
    std::vector<RelationVerdict> audit;
    std::vector<VerificationReport> reports;
    SuiteSummary summary;
    bool all_pass() const { return summary.failed == 0 && summary.relations_failing.empty(); }
};

std::vector<Word> enumerate_words(const std::vector<std::string>& alphabet, int max_length);

SuiteResult run_full_suite(const SuiteConfig& config);

}  // namespace p6
