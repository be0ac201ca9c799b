#include "p6/verify_harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

namespace p6 {

const std::vector<Fixture>& frozen_fixtures() {
    static const std::vector<Fixture> f = [] {
        const Jet start{1.0 / 3, {2.0, 1.0}, 0.0};
        std::vector<Fixture> v;
        v.push_back({"default", CTheta{0.5, 0.5, 0.5, 0.5}, start, 2.0 / 3, 512});
        v.push_back({"generic", CTheta{Complex(0.3, 0.1), 0.7, -0.2, 0.45}, start, 2.0 / 3, 512});
        return v;
    }();
    return f;
}

const Fixture& fixture(const std::string& name) {
    for (const auto& f : frozen_fixtures())
        if (f.name == name) return f;
    throw ParseError("unknown fixture '" + name + "'");
}

SolutionTrace make_test_solution(const CTheta& theta, const Jet& start, Complex x_b,
                                 std::size_t n_min, double tol) {
    IntegrateOptions opt;
    opt.tol = tol;
    const double len = std::abs(x_b - start.x);
    if (n_min > 0 && len > 0) opt.max_step = len / static_cast<double>(n_min);
    opt.max_samples = std::max<std::size_t>(opt.max_samples, 4 * n_min + 16);
    try {
        return integrate(start, theta, {x_b}, opt);
    } catch (const IntegrationError& e) {
        throw IntegrationError(e.kind(), std::string("test solution: ") + e.what(), e.last_jet(),
                               e.partial_trace());
    }
}

SolutionTrace make_test_solution(const Fixture& f, double tol) {
    return make_test_solution(f.theta, f.start, f.x_b, f.n_min, tol);
}

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

bool within(double v, double limit) { return std::isfinite(v) && v <= limit; }

VerificationReport base_report(const std::string& name, const std::string& kind,
                               const SolutionTrace& trace, const std::string& fixture_name) {
    VerificationReport r;
    r.name = name;
    r.kind = kind;
    r.fixture = fixture_name;
    r.source_theta = trace.theta;
    r.samples = trace.samples.size();
    if (!trace.samples.empty()) {
        r.x_a = trace.samples.front().x;
        r.x_b = trace.samples.back().x;
    }
    return r;
}

void record_defects(VerificationReport& r, const SolutionTrace& image) {
    r.image_theta = image.theta;
    TraceDefects d = trace_defects(image.samples, params_from_theta(image.theta));
    r.max_residual = d.max_residual;
    r.max_jet_defect = d.max_jet_defect;
}

double jet_gap(const Jet& a, const Jet& b) {
    return std::max({rel_gap(a.x, b.x), rel_gap(a.u, b.u), rel_gap(a.du, b.du)});
}

}  // namespace

void settle(VerificationReport& r, const Tolerances& tol) {
    std::vector<std::string> why;
    if (r.samples < 5) why.push_back("fewer than 5 samples");
    if (!within(r.max_residual, tol.residual))
        why.push_back("residual " + sci(r.max_residual) + " > " + sci(tol.residual));
    if (!within(r.max_jet_defect, tol.jet))
        why.push_back("jet defect " + sci(r.max_jet_defect) + " > " + sci(tol.jet));
    if (r.max_round_trip_gap && !within(*r.max_round_trip_gap, tol.round_trip))
        why.push_back("round-trip gap " + sci(*r.max_round_trip_gap) + " > " + sci(tol.round_trip));
    if (r.max_cross_gap && !within(*r.max_cross_gap, tol.cross))
        why.push_back("cross-validation gap " + sci(*r.max_cross_gap) + " > " + sci(tol.cross));
    r.pass = why.empty();
    r.diagnostics.clear();
    for (std::size_t i = 0; i < why.size(); ++i) r.diagnostics += (i ? "; " : "") + why[i];
}

VerificationReport verify_word(const Word& w, const SolutionTrace& trace, const Tolerances& tol,
                               Convention c, const std::string& fixture_name) {
    VerificationReport r = base_report(to_string(w), "word", trace, fixture_name);
    record_defects(r, push_trace(w, trace, c));
    settle(r, tol);
    return r;
}

VerificationReport verify_round_trip(const Word& w, const SolutionTrace& trace,
                                     const Tolerances& tol, const std::string& fixture_name) {
    VerificationReport r = base_report(to_string(w), "round-trip", trace, fixture_name);
    SolutionTrace image = push_trace(w, trace);
    record_defects(r, image);
    double gap = 0;
    for (std::size_t i = 0; i < image.samples.size(); ++i)
        gap = std::max(gap, jet_gap(image.samples[i], trace.samples[i]));
    for (std::size_t k = 0; k < 4; ++k) gap = std::max(gap, rel_gap(image.theta[k], trace.theta[k]));
    r.max_round_trip_gap = gap;
    settle(r, tol);
    return r;
}

VerificationReport compare_routes(const Word& direct, const Word& route, const SolutionTrace& trace,
                                  const Tolerances& tol, const std::string& fixture_name) {
    VerificationReport r =
        base_report(to_string(direct) + " vs " + to_string(route), "cross-validation", trace,
                    fixture_name);
    SolutionTrace a = push_trace(direct, trace);
    SolutionTrace b = direct == route ? a : push_trace(route, trace);
    record_defects(r, a);
    double gap = 0;
    for (std::size_t i = 0; i < a.samples.size(); ++i)
        gap = std::max(gap, jet_gap(a.samples[i], b.samples[i]));
    for (std::size_t k = 0; k < 4; ++k) gap = std::max(gap, rel_gap(a.theta[k], b.theta[k]));
    r.max_cross_gap = gap;
    settle(r, tol);
    return r;
}

VerificationReport cross_validate(const std::string& direct, const SolutionTrace& trace,
                                  const Tolerances& tol, const std::string& fixture_name) {
    if (direct == "Tms")
        return compare_routes({{"Tms", 1}}, parse_word("Habdc*Hdcba*(Tcm*Hbadc*Sa*Sd)^2*Habdc"),
                              trace, tol, fixture_name);
    if (direct == "Tnjh")
        return compare_routes({{"Tnjh", -1}}, parse_word("Hbadc*Tcm*Hadcb"), trace, tol,
                              fixture_name);
    throw UnknownGenerator("cross-validation is defined for Tms and Tnjh, not '" + direct + "'");
}

SuiteConfig default_suite_config() {
    SuiteConfig c;
    c.words = {"Sa",    "Sb",    "Sc",    "Sd",    "Hbadc",
               "Hdcba", "Hcdab", "Hadcb", "Hcbad", "Habdc",
               "Hacbd", "Tcm",   "Tms",   "Tnjh^-1",
               "Habdc*Tms*Habdc",           // T_Ok
               "Hbadc*Tcm*Hadcb",           // T_NJH^-1 as a T_CM word
               "Hdcba*(Tcm*Hbadc*Sa*Sd)^2",  // T_Ok as a T_CM word
               "Hcdab*Tcm*Sb*Sd*Tcm*Sa*Sc"};  // T_MS as a T_CM word
    return c;
}

SuiteConfig audit_only_config() {
    SuiteConfig c;
    c.fixtures.clear();
    c.words.clear();
    c.enumerate_length = 0;
    c.round_trips = false;
    c.cross_validations = false;
    return c;
}

std::vector<Word> enumerate_words(const std::vector<std::string>& alphabet, int max_length) {
    std::vector<Word> out;
    std::vector<Word> layer{{}};
    for (int len = 1; len <= max_length; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (const auto& g : alphabet) {
                Word v = w;
                v.push_back({g, 1});
                next.push_back(std::move(v));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

SuiteResult run_full_suite(const SuiteConfig& cfg) {
    SuiteResult res;
    res.audit = audit_relations(cfg.audit_scope);
    {
        std::map<std::string, int> failing;
        std::set<std::string> xmap;
        for (const auto& v : res.audit) {
            failing[v.id] += v.verdict == Verdict::Fails ? 1 : 0;
            if (!v.xmap_consistent) xmap.insert(v.id);
        }
        res.summary.relations = failing.size();
        for (const auto& r : catalog_relations()) {
            if (failing[r.id] == 2) res.summary.relations_failing.push_back(r.id);
            if (xmap.count(r.id)) res.summary.xmap_discrepancies.push_back(r.id);
        }
        res.summary.printed_tcm_is_tcm_hbadc =
            same_affine(tcm_as_printed(), compose(generator("Tcm"), generator("Hbadc")));
    }

    std::vector<Word> words;
    std::set<std::string> listed;
    for (const auto& s : cfg.words) {
        Word w = parse_word(s);
        if (listed.insert(to_string(w)).second) words.push_back(std::move(w));
    }
    for (auto& w : enumerate_words(kEnumerationAlphabet, cfg.enumerate_length))
        if (listed.insert(to_string(w)).second) words.push_back(std::move(w));

    auto guarded = [&](const std::string& fx, const std::string& name, auto&& job) {
        try {
            res.reports.push_back(job());
        } catch (const Error& e) {
            if (e.kind() == "degenerate-map") {
                res.summary.skipped.push_back(fx + ": " + name + " (degenerate-map)");
                return;
            }
            VerificationReport r;
            r.name = name;
            r.kind = "word";
            r.fixture = fx;
            r.pass = false;
            r.diagnostics = e.kind() + ": " + e.what();
            res.reports.push_back(std::move(r));
        }
    };

    for (const auto& fx : cfg.fixtures) {
        const Fixture& f = fixture(fx);
        SolutionTrace trace;
        try {
            trace = make_test_solution(f, cfg.tol.integration);
        } catch (const Error& e) {
            VerificationReport r;
            r.name = "fixture";
            r.kind = "fixture";
            r.fixture = fx;
            r.source_theta = f.theta;
            r.diagnostics = e.kind() + ": " + e.what();
            res.reports.push_back(std::move(r));
            continue;
        }
        for (const auto& w : words)
            guarded(fx, to_string(w), [&] { return verify_word(w, trace, cfg.tol, Convention::LeftAppliedLast, fx); });
        if (cfg.round_trips)
            for (const char* g : {"Tcm", "Hbadc", "Hdcba", "Hcdab", "Hadcb", "Hcbad", "Habdc", "Hacbd"}) {
                Word w{{g, 1}, {g, 1}};
                guarded(fx, to_string(w), [&] { return verify_round_trip(w, trace, cfg.tol, fx); });
            }
        if (cfg.cross_validations)
            for (const char* d : {"Tms", "Tnjh"})
                guarded(fx, d, [&] { return cross_validate(d, trace, cfg.tol, fx); });
    }

    res.summary.reports = res.reports.size();
    for (const auto& r : res.reports) (r.pass ? res.summary.passed : res.summary.failed)++;
    return res;
}

}  // namespace p6
