#include "p6/persistence_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace p6 {

using nlohmann::json;

namespace {

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json cjson(Complex z) { return json::array({z.real(), z.imag()}); }

json ctheta_json(const CTheta& t) {
    json a = json::array();
    for (const auto& z : t) a.push_back(cjson(z));
    return a;
}

json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(v.convert_to<long long>());
    return json(v.str());
}

[[noreturn]] void malformed(const std::string& what) {
    throw MalformedDocument("malformed trace document: " + what);
}

Complex read_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        malformed(where + " must be a [re, im] pair of numbers");
    return {j[0].get<double>(), j[1].get<double>()};
}

Integer read_integer(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) {
        Rational q = parse_rational(j.get<std::string>());
        if (denominator(q) != 1) malformed(where + " must be an integer");
        return numerator(q);
    }
    malformed(where + " must be an integer");
}

const json& field(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) malformed(where + " lacks '" + key + "'");
    return *it;
}

}  // namespace

json to_json(const TraceFile& t) {
    json j;
    j["format"] = "p6-trace";
    j["version"] = t.version;
    if (t.exact_theta) {
        json vals = json::array();
        for (const auto& q : *t.exact_theta)
            vals.push_back(json::array({integer_json(numerator(q)), integer_json(denominator(q))}));
        j["theta"] = {{"kind", "rational"}, {"values", vals}};
    } else {
        j["theta"] = {{"kind", "complex"}, {"values", ctheta_json(t.trace.theta)}};
    }
    json samples = json::array();
    for (const auto& s : t.trace.samples)
        samples.push_back({{"x", cjson(s.x)}, {"u", cjson(s.u)}, {"du", cjson(s.du)}});
    j["samples"] = std::move(samples);
    j["tol"] = t.trace.tol;
    return j;
}

TraceFile trace_from_json(const json& j) {
    if (!j.is_object()) malformed("top level must be an object");
    auto v = j.find("version");
    if (v == j.end()) throw VersionMismatch("trace document has no version field");
    if (!v->is_number_integer() || v->get<long long>() != kTraceVersion)
        throw VersionMismatch("unsupported trace version " + v->dump() + " (expected " +
                              std::to_string(kTraceVersion) + ")");
    TraceFile t;
    const json& th = field(j, "theta", "document");
    const json& kind = field(th, "kind", "theta");
    const json& vals = field(th, "values", "theta");
    if (!vals.is_array() || vals.size() != 4) malformed("theta values must have four entries");
    if (kind == "rational") {
        QTheta q;
        for (std::size_t i = 0; i < 4; ++i) {
            const json& p = vals[i];
            if (!p.is_array() || p.size() != 2) malformed("rational theta entries are [num, den]");
            Integer den = read_integer(p[1], "theta denominator");
            if (den == 0) malformed("zero denominator in theta");
            q[i] = Rational(read_integer(p[0], "theta numerator"), den);
        }
        t.exact_theta = q;
        t.trace.theta = to_complex(q);
    } else if (kind == "complex") {
        for (std::size_t i = 0; i < 4; ++i) t.trace.theta[i] = read_complex(vals[i], "theta entry");
    } else {
        malformed("theta kind must be 'rational' or 'complex'");
    }
    const json& tol = field(j, "tol", "document");
    if (!tol.is_number()) malformed("tol must be a number");
    t.trace.tol = tol.get<double>();
    const json& samples = field(j, "samples", "document");
    if (!samples.is_array()) malformed("samples must be an array");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const json& s = samples[i];
        const std::string where = "sample " + std::to_string(i);
        if (!s.is_object()) malformed(where + " must be an object");
        Jet jet{read_complex(field(s, "x", where), where + ".x"),
                read_complex(field(s, "u", where), where + ".u"),
                read_complex(field(s, "du", where), where + ".du")};
        if (!guards_hold(jet))
            throw SingularConfiguration(where + " violates the jet guards");
        t.trace.samples.push_back(jet);
    }
    return t;
}

void write_trace(std::ostream& os, const TraceFile& t) { os << to_json(t).dump(1) << '\n'; }

void write_trace(const std::string& path, const TraceFile& t) {
    std::ofstream os(path);
    if (!os) throw Error("io-error", "cannot open '" + path + "' for writing");
    write_trace(os, t);
}

TraceFile read_trace(std::istream& is) {
    json j;
    try {
        j = json::parse(is);
    } catch (const json::exception& e) {
        throw MalformedDocument(std::string("trace is not valid JSON: ") + e.what());
    }
    return trace_from_json(j);
}

TraceFile read_trace(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("io-error", "cannot open '" + path + "'");
    return read_trace(is);
}

// ---------------------------------------------------------------- reports

json to_json(const RelationVerdict& v) {
    json j;
    j["id"] = v.id;
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
    j["convention"] = to_string(v.convention);
    j["verdict"] = to_string(v.verdict);
    if (v.witness)
        j["witness"] = {{"left", to_string(v.witness->first)}, {"right", to_string(v.witness->second)}};
    else
        j["witness"] = nullptr;
    j["xmap_consistent"] = v.xmap_consistent;
    return j;
}

json to_json(const VerificationReport& r) {
    json j;
    j["name"] = r.name;
    j["kind"] = r.kind;
    j["fixture"] = r.fixture;
    j["source_theta"] = ctheta_json(r.source_theta);
    j["image_theta"] = ctheta_json(r.image_theta);
    j["interval"] = json::array({cjson(r.x_a), cjson(r.x_b)});
    j["samples"] = r.samples;
    j["max_residual"] = num(r.max_residual);
    j["max_jet_defect"] = num(r.max_jet_defect);
    j["max_round_trip_gap"] = r.max_round_trip_gap ? num(*r.max_round_trip_gap) : json(nullptr);
    j["max_cross_gap"] = r.max_cross_gap ? num(*r.max_cross_gap) : json(nullptr);
    j["pass"] = r.pass;
    j["diagnostics"] = r.diagnostics;
    return j;
}

json to_json(const SuiteSummary& s) {
    json j;
    j["relations"] = s.relations;
    j["relations_failing"] = s.relations_failing;
    j["xmap_discrepancies"] = s.xmap_discrepancies;
    j["printed_tcm_is_tcm_hbadc"] = s.printed_tcm_is_tcm_hbadc;
    j["reports"] = s.reports;
    j["passed"] = s.passed;
    j["failed"] = s.failed;
    j["skipped"] = s.skipped;
    return j;
}

json report_document(const std::vector<RelationVerdict>& audit,
                     const std::vector<VerificationReport>& reports,
                     const std::optional<SuiteSummary>& summary) {
    json j;
    j["format"] = "p6-report";
    j["version"] = kReportVersion;
    j["audit"] = json::array();
    for (const auto& v : audit) j["audit"].push_back(to_json(v));
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json(r));
    j["summary"] = summary ? to_json(*summary) : json(nullptr);
    return j;
}

json report_document(const SuiteResult& r) { return report_document(r.audit, r.reports, r.summary); }

void write_report(std::ostream& os, const json& doc) { os << doc.dump(1) << '\n'; }

// ---------------------------------------------------------------- suite config

json to_json(const SuiteConfig& c) {
    json j;
    j["version"] = kConfigVersion;
    j["tolerances"] = {{"integration", c.tol.integration}, {"jet", c.tol.jet},
                       {"residual", c.tol.residual},       {"round_trip", c.tol.round_trip},
                       {"cross", c.tol.cross}};
    j["fixtures"] = c.fixtures;
    j["words"] = c.words;
    j["enumerate_length"] = c.enumerate_length;
    j["round_trips"] = c.round_trips;
    j["cross_validations"] = c.cross_validations;
    j["audit_scope"] = to_string(c.audit_scope);
    return j;
}

SuiteConfig suite_config_from_json(const json& j) {
    if (!j.is_object()) throw MalformedDocument("suite config must be an object");
    auto v = j.find("version");
    if (v == j.end() || !v->is_number_integer() || v->get<long long>() != kConfigVersion)
        throw VersionMismatch("suite config must carry \"version\": " +
                              std::to_string(kConfigVersion));
    SuiteConfig c = default_suite_config();
    try {
        if (auto t = j.find("tolerances"); t != j.end()) {
            c.tol.integration = t->value("integration", c.tol.integration);
            c.tol.jet = t->value("jet", c.tol.jet);
            c.tol.residual = t->value("residual", c.tol.residual);
            c.tol.round_trip = t->value("round_trip", c.tol.round_trip);
            c.tol.cross = t->value("cross", c.tol.cross);
        }
        c.fixtures = j.value("fixtures", c.fixtures);
        c.words = j.value("words", c.words);
        c.enumerate_length = j.value("enumerate_length", c.enumerate_length);
        c.round_trips = j.value("round_trips", c.round_trips);
        c.cross_validations = j.value("cross_validations", c.cross_validations);
        std::string scope = j.value("audit_scope", to_string(c.audit_scope));
        if (scope == "signs")
            c.audit_scope = Scope::Signs;
        else if (scope == "x-preserving")
            c.audit_scope = Scope::XPreserving;
        else if (scope == "full")
            c.audit_scope = Scope::Full;
        else
            throw MalformedDocument("unknown audit_scope '" + scope + "'");
    } catch (const json::exception& e) {
        throw MalformedDocument(std::string("suite config: ") + e.what());
    }
    if (c.enumerate_length < 0 || c.enumerate_length > 6)
        throw MalformedDocument("enumerate_length must lie in [0, 6]");
    return c;
}

SuiteConfig read_suite_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("io-error", "cannot open '" + path + "'");
    try {
        return suite_config_from_json(json::parse(is));
    } catch (const json::parse_error& e) {
        throw MalformedDocument(std::string("suite config is not valid JSON: ") + e.what());
    }
}

}  // namespace p6
