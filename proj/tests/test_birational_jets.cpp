#include "p6/birational_jets.hpp"
#include "p6/verify_harness.hpp"

#include <doctest.h>

using namespace p6;

namespace {

const char* const kHomographies[] = {"Hbadc", "Hdcba", "Hcdab", "Hadcb", "Hcbad", "Habdc", "Hacbd"};

double jet_gap(const Jet& a, const Jet& b) {
    return std::max({rel_gap(a.x, b.x), rel_gap(a.u, b.u), rel_gap(a.du, b.du)});
}

const SolutionTrace& generic_trace() {
    static const SolutionTrace t = make_test_solution(fixture("generic"), 1e-10);
    return t;
}

TraceDefects defects(const SolutionTrace& t) { return trace_defects(t.samples, params_from_theta(t.theta)); }

}  // namespace

TEST_SUITE("birational_jets") {

TEST_CASE("trivial pushforward examples") {
    const CTheta th{0.1, 0.2, 0.3, 0.4};
    auto s = push_trivial("Sa", {2.0, 5.0, 3.0}, th);
    CHECK(s.jet == Jet{2.0, 5.0, 3.0});
    CHECK(s.theta[0] == Complex(-0.1));

    auto h = push_trivial("Hacbd", {2.0, 3.0, 4.0}, th);
    CHECK(std::abs(h.jet.x - -1.0) < 1e-15);
    CHECK(std::abs(h.jet.u - -2.0) < 1e-15);
    CHECK(std::abs(h.jet.du - 4.0) < 1e-15);

    auto a = push_trivial("Habdc", {2.0, 3.0, 5.0}, th);
    CHECK(std::abs(a.jet.x - 0.5) < 1e-15);
    CHECK(std::abs(a.jet.u - 1.5) < 1e-15);
    CHECK(std::abs(a.jet.du - -7.0) < 1e-14);

    CHECK_THROWS_AS(push_trivial("Tcm", {2.0, 3.0, 5.0}, th), UnknownGenerator);
}

TEST_CASE("homographies are involutions on jets") {
    const CTheta th{Complex(0.3, 0.1), 0.7, -0.2, 0.45};
    const Jet j{Complex(0.4, 0.1), Complex(2.0, 1.0), Complex(-0.5, 0.25)};
    for (const char* h : kHomographies) {
        CAPTURE(h);
        auto once = push_trivial(h, j, th);
        auto twice = push_trivial(h, once.jet, once.theta);
        CHECK(jet_gap(twice.jet, j) < 1e-13);
        for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(twice.theta[k] - th[k]) < 1e-15);
    }
}

TEST_CASE("homography images of a trace solve the target equation") {
    for (const char* h : kHomographies) {
        CAPTURE(h);
        auto img = push_trace({{h, 1}}, generic_trace());
        auto d = defects(img);
        CHECK(d.max_residual <= 1e-6);
        CHECK(d.max_jet_defect <= 1e-6);
    }
}

TEST_CASE("T_CM pushforward") {
    const auto& t = generic_trace();
    auto img = push_trace({{"Tcm", 1}}, t);
    CHECK(defects(img).max_residual <= 1e-6);
    CHECK(defects(img).max_jet_defect <= 1e-6);
    auto back = push_trace({{"Tcm", 1}}, img);
    double gap = 0;
    for (std::size_t i = 0; i < t.samples.size(); ++i) gap = std::max(gap, jet_gap(back.samples[i], t.samples[i]));
    CHECK(gap <= 1e-9);
    // Exponents of the image follow the affine map.
    CTheta expect = apply_theta(generator("Tcm"), t.theta);
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(img.theta[k] - expect[k]) < 1e-15);
}

TEST_CASE("T_CM degenerates when the infinity exponent is fixed") {
    // Sa·(1/2,1/2,1/2,1/2) is a fixed point of T_CM.
    const CTheta th{-0.5, 0.5, 0.5, 0.5};
    CHECK_THROWS_AS(push_tcm({0.4, {2.0, 1.0}, 0.0}, th), DegenerateMap);
    try {
        push_word(parse_word("Tcm*Sa"), {0.4, {2.0, 1.0}, 0.0}, CTheta{0.5, 0.5, 0.5, 0.5});
        FAIL("expected degenerate-map");
    } catch (const Error& e) {
        CHECK(e.kind() == "degenerate-map");
        CHECK(std::string(e.what()).find("step 1") != std::string::npos);
    }
}

TEST_CASE("T_MS pushforward reproduces its defining invariant") {
    const auto& t = generic_trace();
    auto img = push_trace({{"Tms", 1}}, t);
    CHECK(defects(img).max_residual <= 1e-6);
    CHECK(defects(img).max_jet_defect <= 1e-6);
    for (std::size_t i = 0; i < t.samples.size(); i += 37) {
        const Jet& J = t.samples[i];
        const Jet& j = img.samples[i];
        Complex k = ms_factors(J, t.theta).k();
        Complex expect = (j.u - j.x) * (J.u - J.x) / ((j.x - 1.0) * j.u * J.u);
        CHECK(rel_gap(k, expect) < 1e-10);
    }
    CTheta shift = apply_theta(generator("Tms"), t.theta);
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(img.theta[k] - shift[k]) < 1e-15);
}

TEST_CASE("T_NJH pushforward goes old to new") {
    const auto& t = generic_trace();
    auto img = push_trace({{"Tnjh", -1}}, t);
    CHECK(defects(img).max_residual <= 1e-6);
    CHECK(defects(img).max_jet_defect <= 1e-6);
    for (std::size_t i = 0; i < t.samples.size(); i += 50) {
        const Complex x = t.samples[i].x;
        CHECK(std::abs(img.samples[i].x - x / (x - 1.0)) < 1e-15);
    }
    // Old exponents are recovered by applying the forward map to the new ones.
    CTheta back = apply_theta(generator("Tnjh"), img.theta);
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(back[k] - t.theta[k]) < 1e-14);
}

TEST_CASE("directions and suggestions") {
    CHECK(direction_of("Tms", 1) == TransformDirection::NewToOld);
    CHECK(direction_of("Tnjh", -1) == TransformDirection::OldToNew);
    CHECK(direction_available("Tms", 1));
    CHECK_FALSE(direction_available("Tms", -1));
    CHECK(direction_available("Tnjh", -1));
    CHECK_FALSE(direction_available("Tnjh", 1));
    CHECK_FALSE(direction_available("Tok", 1));
    CHECK_FALSE(direction_available("Tfy", -1));
    for (const char* g : {"Sa", "Hbadc", "Hacbd", "Tcm"}) {
        CHECK(direction_available(g, 1));
        CHECK(direction_available(g, -1));
    }
    try {
        push_word(parse_word("Tok"), {0.4, 2.0, 0.0}, CTheta{0.1, 0.2, 0.3, 0.4});
        FAIL("expected direction-unavailable");
    } catch (const DirectionUnavailable& e) {
        CHECK(e.kind() == "direction-unavailable");
        CHECK(std::string(e.what()).find("Hdcba*(Tcm*Hbadc*Sa*Sd)^2") != std::string::npos);
    }
}

TEST_CASE("suggested words realize the requested affine map") {
    for (const char* g : {"Tms", "Tnjh", "Tok", "Tfy"})
        for (int sign : {1, -1}) {
            CAPTURE(g);
            CAPTURE(sign);
            std::string w = suggested_word(g, sign);
            AffineMap target = sign > 0 ? generator(g) : inverse(generator(g));
            CHECK(same_affine(evaluate_word(w), target));
            // The suggestion itself must be pushable.
            for (const auto& t : application_order(parse_word(w), Convention::LeftAppliedLast))
                CHECK(direction_available(t.name, t.power));
        }
}

TEST_CASE("pushing words") {
    const CTheta th{Complex(0.3, 0.1), 0.7, -0.2, 0.45};
    const Jet j = generic_trace().samples[100];
    auto same = push_word({}, j, th);
    CHECK(same.jet == j);
    CHECK(same.theta == th);
    auto two = push_word(parse_word("Tcm*Tcm"), j, th);
    CHECK(jet_gap(two.jet, j) <= 1e-9);

    // Under "last" the rightmost token acts first.
    Word w = parse_word("Hbadc*Tcm");
    auto manual = push_trivial("Hbadc", push_tcm(j, th).jet, push_tcm(j, th).theta);
    auto viaw = push_word(w, j, th);
    CHECK(jet_gap(viaw.jet, manual.jet) < 1e-15);
    auto first = push_word(w, j, th, Convention::LeftAppliedFirst);
    auto h = push_trivial("Hbadc", j, th);
    CHECK(jet_gap(first.jet, push_tcm(h.jet, h.theta).jet) < 1e-15);

    for (auto c : {Convention::LeftAppliedLast, Convention::LeftAppliedFirst}) {
        Word ww = parse_word("Sa*Tcm*Hadcb*Tms*Sd");
        CTheta got = theta_after(ww, th, c);
        CTheta expect = apply_theta(evaluate_word(ww, c), th);
        for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(got[k] - expect[k]) < 1e-14);
    }
}

TEST_CASE("trace errors carry sample and step") {
    SolutionTrace t = generic_trace();
    t.theta = CTheta{-0.5, 0.5, 0.5, 0.5};
    try {
        push_trace(parse_word("Tcm"), t);
        FAIL("expected degenerate-map");
    } catch (const DegenerateMap& e) {
        CHECK(std::string(e.what()).find("sample 0, step 0 (Tcm)") != std::string::npos);
    }
}

}  // TEST_SUITE
