#include "p6/cli.hpp"

#include "p6/birational_jets.hpp"
#include "p6/persistence_io.hpp"
#include "p6/theta_algebra.hpp"
#include "p6/verify_harness.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace p6::cli {

using nlohmann::json;

// ---------------------------------------------------------------- value parsing

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_real(std::string_view t, std::string_view whole) {
    t = trim(t);
    if (t.find('/') != std::string_view::npos) return to_double(parse_rational(t));
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    double v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
        throw ParseError("malformed number '" + std::string(whole) + "'");
    return v;
}

bool all_rational(const std::vector<std::string>& parts) {
    for (const auto& p : parts) {
        try {
            parse_rational(p);
        } catch (const ParseError&) {
            return false;
        }
    }
    return true;
}

std::vector<std::string> four(const std::string& text, const char* what) {
    auto parts = split_list(text);
    if (parts.size() != 4)
        throw ParseError(std::string(what) + " needs four comma-separated values, got '" + text + "'");
    return parts;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty complex number");
    if (s.back() != 'j' && s.back() != 'i') return {parse_real(s, text), 0.0};
    std::string_view body = s.substr(0, s.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string_view re = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view im = split == std::string_view::npos ? body : body.substr(split);
    im = trim(im);
    double imv = (im.empty() || im == "+") ? 1.0 : im == "-" ? -1.0 : parse_real(im, text);
    return {re.empty() ? 0.0 : parse_real(re, text), imv};
}

std::vector<std::string> split_list(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t b = 0;
    for (;;) {
        std::size_t e = text.find(sep, b);
        out.emplace_back(trim(text.substr(b, e == std::string_view::npos ? e : e - b)));
        if (e == std::string_view::npos) break;
        b = e + 1;
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string format_complex(Complex z) {
    if (z.imag() == 0) return format_double(z.real());
    std::string im = format_double(std::abs(z.imag())) + "j";
    if (z.real() == 0) return (z.imag() < 0 ? "-" : "") + im;
    return format_double(z.real()) + (z.imag() < 0 ? "-" : "+") + im;
}

// ---------------------------------------------------------------- commands

namespace {

struct Io {
    std::ostream& out;
    std::ostream& err;
};

json rational_json(const Rational& q) { return to_string(q); }

json theta_json(const QTheta& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(rational_json(q));
    return a;
}

std::string ctheta_text(const CTheta& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < 4; ++i) s += (i ? ", " : "") + format_complex(t[i]);
    return s + ")";
}

void print_json(std::ostream& os, const json& j) { os << j.dump(1) << '\n'; }

int cmd_compose(Io io, const std::string& word, Convention conv, int max_order, bool as_json) {
    AffineMap m = evaluate_word(parse_word(word), conv);
    OrderResult o = order_of(m, max_order);
    if (as_json) {
        json j;
        j["word"] = to_string(m.word);
        j["convention"] = to_string(conv);
        j["m1"] = json::array();
        for (const auto& row : m.m1) {
            json r = json::array();
            for (const auto& q : row) r.push_back(rational_json(q));
            j["m1"].push_back(r);
        }
        j["m0"] = theta_json(m.m0);
        j["xmap"] = {{"coefficients",
                      {to_string(m.xmap.a()), to_string(m.xmap.b()), to_string(m.xmap.c()),
                       to_string(m.xmap.d())}},
                     {"text", m.xmap.to_string()}};
        j["order"] = o.affine ? json(*o.affine) : json(nullptr);
        j["xmap_order"] = o.xmap ? json(*o.xmap) : json(nullptr);
        j["order_search_limit"] = max_order;
        j["identity"] = same_affine(m, AffineMap::identity());
        print_json(io.out, j);
        return kExitOk;
    }
    io.out << "word: " << to_string(m.word) << " (leftmost applied " << to_string(conv) << ")\n";
    io.out << "m1:\n";
    for (const auto& row : m.m1) {
        io.out << "  [";
        for (std::size_t k = 0; k < 4; ++k) io.out << (k ? " " : "") << to_string(row[k]);
        io.out << "]\n";
    }
    io.out << "m0: " << to_string(m.m0) << "\n";
    io.out << "xmap: " << m.xmap.to_string() << "\n";
    if (same_affine(m, AffineMap::identity()))
        io.out << "identity map on exponents\n";
    io.out << "order: "
           << (o.affine ? std::to_string(*o.affine)
                        : "not finite up to " + std::to_string(max_order))
           << "\n";
    io.out << "xmap order: "
           << (o.xmap ? std::to_string(*o.xmap) : "not finite up to " + std::to_string(max_order))
           << "\n";
    return kExitOk;
}

int cmd_audit(Io io, const std::string& relation, Scope scope, bool as_json) {
    std::vector<RelationVerdict> verdicts;
    if (!relation.empty()) {
        const Relation* rel = nullptr;
        for (const auto& r : catalog_relations())
            if (r.id == relation) rel = &r;
        if (!rel) {
            std::string ids;
            for (const auto& r : catalog_relations()) ids += " " + r.id;
            throw ParseError("unknown relation '" + relation + "'; known:" + ids);
        }
        verdicts.push_back(audit_relation(*rel, Convention::LeftAppliedLast, scope));
        verdicts.push_back(audit_relation(*rel, Convention::LeftAppliedFirst, scope));
    } else {
        verdicts = audit_relations(scope);
    }
    bool failing = false;
    for (std::size_t i = 0; i + 1 < verdicts.size(); i += 2)
        failing = failing || (verdicts[i].verdict == Verdict::Fails &&
                              verdicts[i + 1].verdict == Verdict::Fails);
    const bool printed_ok =
        same_affine(tcm_as_printed(), compose(generator("Tcm"), generator("Hbadc")));
    if (as_json) {
        SuiteSummary s;
        s.relations = verdicts.size() / 2;
        for (std::size_t i = 0; i + 1 < verdicts.size(); i += 2) {
            if (verdicts[i].verdict == Verdict::Fails && verdicts[i + 1].verdict == Verdict::Fails)
                s.relations_failing.push_back(verdicts[i].id);
            if (!verdicts[i].xmap_consistent || !verdicts[i + 1].xmap_consistent)
                s.xmap_discrepancies.push_back(verdicts[i].id);
        }
        s.printed_tcm_is_tcm_hbadc = printed_ok;
        print_json(io.out, report_document(verdicts, {}, s));
        return failing ? kExitFailure : kExitOk;
    }
    for (const auto& v : verdicts) {
        io.out << v.id << "  [" << to_string(v.convention) << "]  " << to_string(v.verdict);
        if (v.witness && v.verdict != Verdict::Exact)
            io.out << "  L=" << to_string(v.witness->first) << " R=" << to_string(v.witness->second);
        io.out << "  xmap " << (v.xmap_consistent ? "consistent" : "INCONSISTENT") << "\n";
        if (v.convention == Convention::LeftAppliedFirst) continue;
        io.out << "    " << v.lhs << " = " << v.rhs << "\n";
    }
    io.out << "note: transcribed T_CM matrix "
           << (printed_ok ? "equals" : "does not equal") << " T_CM*Hbadc\n";
    return failing ? kExitFailure : kExitOk;
}

int cmd_orbit(Io io, const std::string& theta, const std::string& gens, int depth, bool as_json) {
    auto parts = four(theta, "--theta");
    QTheta start;
    for (std::size_t i = 0; i < 4; ++i) start[i] = parse_rational(parts[i]);
    std::vector<std::string> names = split_list(gens);
    for (const auto& n : names)
        if (!is_generator(n)) throw UnknownGenerator("unknown generator '" + n + "'");
    auto pts = orbit_bfs(start, names, depth);
    if (as_json) {
        json j;
        j["start"] = theta_json(start);
        j["generators"] = names;
        j["depth"] = depth;
        j["size"] = pts.size();
        j["points"] = json::array();
        for (const auto& p : pts)
            j["points"].push_back({{"theta", theta_json(p.theta)}, {"word", to_string(p.word)}});
        print_json(io.out, j);
        return kExitOk;
    }
    io.out << "orbit size " << pts.size() << " (depth " << depth << ")\n";
    for (const auto& p : pts) io.out << "  " << to_string(p.theta) << "  " << to_string(p.word) << "\n";
    return kExitOk;
}

struct ThetaInput {
    CTheta theta;
    std::optional<QTheta> exact;
};

ThetaInput read_theta_or_params(const std::string& theta, const std::string& params,
                                const std::string& branch) {
    ThetaInput in;
    if (!theta.empty()) {
        auto parts = four(theta, "--theta");
        if (all_rational(parts)) {
            QTheta q;
            for (std::size_t i = 0; i < 4; ++i) q[i] = parse_rational(parts[i]);
            in.exact = q;
            in.theta = to_complex(q);
        } else {
            for (std::size_t i = 0; i < 4; ++i) in.theta[i] = parse_complex(parts[i]);
        }
        return in;
    }
    auto parts = four(params, "--params");
    ParameterVector p(parse_complex(parts[0]), parse_complex(parts[1]), parse_complex(parts[2]),
                      parse_complex(parts[3]));
    in.theta = theta_from_params(p, parse_branch(branch));
    return in;
}

int cmd_integrate(Io io, const ThetaInput& th, const std::string& jet, const std::string& to,
                  const IntegrateOptions& opt, const std::string& out_path) {
    auto parts = split_list(jet);
    if (parts.size() != 3) throw ParseError("--jet needs x,u,du");
    Jet start{parse_complex(parts[0]), parse_complex(parts[1]), parse_complex(parts[2])};
    Complex x_b = parse_complex(to);
    auto emit = [&](const SolutionTrace& t) {
        TraceFile f;
        f.trace = t;
        f.exact_theta = th.exact;
        if (out_path.empty()) {
            write_trace(io.out, f);
        } else {
            write_trace(out_path, f);
            io.err << "wrote " << t.samples.size() << " samples to " << out_path << "\n";
        }
    };
    try {
        emit(integrate(start, th.theta, {x_b}, opt));
        return kExitOk;
    } catch (const IntegrationError& e) {
        io.err << "error [" << e.kind() << "]: " << e.what() << "\n";
        io.err << "last valid jet: x=" << format_complex(e.last_jet().x)
               << " u=" << format_complex(e.last_jet().u)
               << " du=" << format_complex(e.last_jet().du) << "\n";
        if (!out_path.empty()) emit(e.partial_trace());
        return kExitFailure;
    }
}

void print_report(std::ostream& os, const VerificationReport& r) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.kind << "]"
       << (r.fixture.empty() ? "" : "  fixture " + r.fixture) << "\n";
    os << "  source theta " << ctheta_text(r.source_theta) << "\n";
    os << "  image theta  " << ctheta_text(r.image_theta) << "\n";
    os << "  interval " << format_complex(r.x_a) << " .. " << format_complex(r.x_b) << ", "
       << r.samples << " samples\n";
    os << "  max residual " << format_double(r.max_residual) << ", max jet defect "
       << format_double(r.max_jet_defect) << "\n";
    if (r.max_round_trip_gap) os << "  round-trip gap " << format_double(*r.max_round_trip_gap) << "\n";
    if (r.max_cross_gap) os << "  cross-validation gap " << format_double(*r.max_cross_gap) << "\n";
    if (!r.diagnostics.empty()) os << "  " << r.diagnostics << "\n";
}

SuiteConfig load_config(const std::string& path) {
    if (!path.empty()) return read_suite_config(path);
    if (const char* env = std::getenv(kConfigEnv); env && *env) return read_suite_config(env);
    return default_suite_config();
}

int cmd_verify(Io io, const std::string& word, const std::string& cross, bool round_trip,
               const std::string& trace_path, const std::string& fixture_name, Convention conv,
               Tolerances tol, bool as_json) {
    SolutionTrace trace;
    std::string fx = fixture_name;
    if (!trace_path.empty()) {
        trace = read_trace(trace_path).trace;
        fx = trace_path;
    } else {
        trace = make_test_solution(fixture(fixture_name), tol.integration);
    }
    VerificationReport r;
    if (!cross.empty())
        r = cross_validate(cross, trace, tol, fx);
    else if (round_trip)
        r = verify_round_trip(parse_word(word), trace, tol, fx);
    else
        r = verify_word(parse_word(word), trace, tol, conv, fx);
    if (as_json)
        print_json(io.out, report_document({}, {r}));
    else
        print_report(io.out, r);
    return r.pass ? kExitOk : kExitFailure;
}

int cmd_suite(Io io, const SuiteConfig& cfg, const std::string& out_path, bool as_json) {
    SuiteResult res = run_full_suite(cfg);
    json doc = report_document(res);
    if (!out_path.empty()) {
        std::ofstream os(out_path);
        if (!os) throw Error("io-error", "cannot open '" + out_path + "' for writing");
        write_report(os, doc);
    }
    if (as_json) {
        write_report(io.out, doc);
    } else {
        const auto& s = res.summary;
        io.out << "relations audited: " << s.relations << ", failing under both conventions: "
               << s.relations_failing.size() << "\n";
        for (const auto& id : s.xmap_discrepancies) io.out << "  xmap discrepancy: " << id << "\n";
        io.out << "transcribed T_CM = T_CM*Hbadc: " << (s.printed_tcm_is_tcm_hbadc ? "yes" : "no")
               << "\n";
        io.out << "reports: " << s.reports << ", passed " << s.passed << ", failed " << s.failed
               << ", skipped " << s.skipped.size() << "\n";
        for (const auto& r : res.reports)
            if (!r.pass) print_report(io.out, r);
    }
    return res.all_pass() ? kExitOk : kExitFailure;
}

int cmd_convert(Io io, const std::string& theta, const std::string& params,
                const std::string& branch, bool as_json) {
    if (!theta.empty()) {
        auto parts = four(theta, "--theta");
        if (all_rational(parts)) {
            QTheta q;
            for (std::size_t i = 0; i < 4; ++i) q[i] = parse_rational(parts[i]);
            QParameters p = params_from_theta(q);
            if (as_json) {
                print_json(io.out, {{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)},
                                    {"gamma", to_string(p.gamma)}, {"delta", to_string(p.delta)}});
            } else {
                io.out << "alpha = " << to_string(p.alpha) << "\nbeta = " << to_string(p.beta)
                       << "\ngamma = " << to_string(p.gamma) << "\ndelta = " << to_string(p.delta)
                       << "\n";
            }
            return kExitOk;
        }
        CTheta t;
        for (std::size_t i = 0; i < 4; ++i) t[i] = parse_complex(parts[i]);
        ParameterVector p = params_from_theta(t);
        if (as_json) {
            auto c = [](Complex z) { return json::array({z.real(), z.imag()}); };
            print_json(io.out, {{"alpha", c(p.alpha)}, {"beta", c(p.beta)}, {"gamma", c(p.gamma)},
                                {"delta", c(p.delta)}});
        } else {
            io.out << "alpha = " << format_complex(p.alpha) << "\nbeta = " << format_complex(p.beta)
                   << "\ngamma = " << format_complex(p.gamma)
                   << "\ndelta = " << format_complex(p.delta) << "\n";
        }
        return kExitOk;
    }
    ThetaInput in = read_theta_or_params("", params, branch);
    static const char* names[4] = {"theta_inf", "theta_0", "theta_1", "theta_x"};
    if (as_json) {
        json j;
        for (std::size_t i = 0; i < 4; ++i)
            j[names[i]] = json::array({in.theta[i].real(), in.theta[i].imag()});
        j["branch"] = branch;
        print_json(io.out, j);
    } else {
        for (std::size_t i = 0; i < 4; ++i)
            io.out << names[i] << " = " << format_complex(in.theta[i]) << "\n";
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Io io{out, err};
    CLI::App app{"Schlesinger transformations of Painleve VI: exact affine algebra, birational "
                 "pushforwards and numeric verification",
                 "p6st"};
    app.require_subcommand(1);

    std::string format = "human";
    auto fmt_opt = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"human", "json"}));
    };
    std::string convention = "last";
    auto conv_opt = [&convention](CLI::App* sub) {
        sub->add_option("--convention", convention,
                        "Reading of products: 'last' = leftmost applied last")
            ->check(CLI::IsMember({"last", "first"}));
    };

    auto* compose_cmd = app.add_subcommand("compose", "Print the affine map of a word and its order");
    std::string word;
    int max_order = 12;
    compose_cmd->add_option("word", word, "Word, e.g. \"(Sa*Tcm)^3\"")->required();
    compose_cmd->add_option("--max-order", max_order, "Largest power tried by the order search")
        ->check(CLI::Range(1, 1000));
    conv_opt(compose_cmd);
    fmt_opt(compose_cmd);

    auto* audit_cmd = app.add_subcommand("audit", "Audit the catalogued relations");
    std::string relation, scope = "trivial";
    audit_cmd->add_option("--relation", relation, "Audit a single relation id");
    audit_cmd->add_option("--scope", scope, "Widest trivial-symmetry scope for witnesses")
        ->check(CLI::IsMember({"signs", "trivial"}));
    fmt_opt(audit_cmd);

    auto* orbit_cmd = app.add_subcommand("orbit", "Breadth-first orbit of an exponent vector");
    std::string orbit_theta, orbit_gens;
    int depth = 1;
    orbit_cmd->add_option("--theta", orbit_theta, "Rational exponents p/q,p/q,p/q,p/q")->required();
    orbit_cmd->add_option("--generators", orbit_gens, "Comma-separated generator names")->required();
    orbit_cmd->add_option("--depth", depth, "Search depth")->check(CLI::Range(0, kMaxOrbitDepth));
    fmt_opt(orbit_cmd);

    auto* integrate_cmd = app.add_subcommand("integrate", "Integrate PVI and write a trace file");
    std::string theta, params, branch = "++++", jet, to, out_path;
    IntegrateOptions iopt;
    int n_min = 0;
    auto* th_opt = integrate_cmd->add_option("--theta", theta, "Exponents (rational or complex)");
    auto* pa_opt = integrate_cmd->add_option("--params", params, "alpha,beta,gamma,delta");
    th_opt->excludes(pa_opt);
    integrate_cmd->add_option("--branch", branch, "Square-root signs for --params, e.g. ++-+");
    integrate_cmd->add_option("--jet", jet, "Initial x,u,du")->required();
    integrate_cmd->add_option("--to", to, "End point of the straight path")->required();
    integrate_cmd->add_option("--tol", iopt.tol, "Local error tolerance")->check(CLI::PositiveNumber);
    integrate_cmd->add_option("--max-samples", iopt.max_samples, "Sample budget");
    integrate_cmd->add_option("--max-step", iopt.max_step, "Step cap along the path");
    integrate_cmd->add_option("--n-min", n_min, "Minimum number of steps (sets the step cap)");
    integrate_cmd->add_option("--out", out_path, "Trace file (stdout when absent)");

    auto* verify_cmd = app.add_subcommand("verify", "Verify that a word maps PVI solutions to PVI solutions");
    std::string cross, trace_path, fixture_name, config_path;
    bool round_trip = false;
    double residual_tol = 0, jet_tol = 0;
    auto* w_opt = verify_cmd->add_option("--word", word, "Word to push the trace through");
    auto* c_opt = verify_cmd->add_option("--cross", cross, "Cross-validate Tms or Tnjh against its word route")
                      ->check(CLI::IsMember({"Tms", "Tnjh"}));
    w_opt->excludes(c_opt);
    verify_cmd->add_flag("--round-trip", round_trip, "Also require the image to equal the source");
    auto* tr_opt = verify_cmd->add_option("--trace", trace_path, "Trace file");
    auto* fx_opt = verify_cmd->add_option("--fixture", fixture_name, "Frozen fixture: default or generic")
                       ->check(CLI::IsMember({"default", "generic"}));
    tr_opt->excludes(fx_opt);
    verify_cmd->add_option("--config", config_path, "Suite config supplying tolerances");
    verify_cmd->add_option("--residual-tol", residual_tol, "Override the residual tolerance");
    verify_cmd->add_option("--jet-tol", jet_tol, "Override the jet-consistency tolerance");
    conv_opt(verify_cmd);
    fmt_opt(verify_cmd);

    auto* suite_cmd = app.add_subcommand("suite", "Run the audit and every verification");
    std::string suite_out;
    suite_cmd->add_option("--config", config_path, std::string("Suite config (default: $") + kConfigEnv + ")");
    suite_cmd->add_option("--out", suite_out, "Write the JSON report here");
    fmt_opt(suite_cmd);

    auto* convert_cmd = app.add_subcommand("convert", "Convert between exponents and parameters");
    auto* cth = convert_cmd->add_option("--theta", theta, "Exponents");
    auto* cpa = convert_cmd->add_option("--params", params, "alpha,beta,gamma,delta");
    cth->excludes(cpa);
    convert_cmd->add_option("--branch", branch, "Square-root signs, e.g. ++-+");
    fmt_opt(convert_cmd);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    const bool as_json = format == "json";
    try {
        if (*compose_cmd) return cmd_compose(io, word, parse_convention(convention), max_order, as_json);
        if (*audit_cmd) return cmd_audit(io, relation, scope == "signs" ? Scope::Signs : Scope::Full, as_json);
        if (*orbit_cmd) return cmd_orbit(io, orbit_theta, orbit_gens, depth, as_json);
        if (*integrate_cmd) {
            if (theta.empty() && params.empty()) throw ParseError("give --theta or --params");
            if (n_min > 0) {
                auto parts = split_list(jet);
                if (parts.empty()) throw ParseError("--jet needs x,u,du");
                iopt.max_step = std::abs(parse_complex(to) - parse_complex(parts[0])) / n_min;
            }
            return cmd_integrate(io, read_theta_or_params(theta, params, branch), jet, to, iopt,
                                 out_path);
        }
        if (*verify_cmd) {
            if (word.empty() && cross.empty()) throw ParseError("give --word or --cross");
            if (trace_path.empty() && fixture_name.empty()) fixture_name = "default";
            Tolerances tol = load_config(config_path).tol;
            if (residual_tol > 0) tol.residual = residual_tol;
            if (jet_tol > 0) tol.jet = jet_tol;
            return cmd_verify(io, word, cross, round_trip, trace_path, fixture_name,
                              parse_convention(convention), tol, as_json);
        }
        if (*suite_cmd) return cmd_suite(io, load_config(config_path), suite_out, as_json);
        if (*convert_cmd) {
            if (theta.empty() && params.empty()) throw ParseError("give --theta or --params");
            return cmd_convert(io, theta, params, branch, as_json);
        }
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error [" << e.kind() << "]: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace p6::cli
