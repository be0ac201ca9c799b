#include "p6/birational_jets.hpp"

#include "p6/dual.hpp"

#include <cmath>
#include <map>

namespace p6 {

namespace {

struct CAffine {
    std::array<std::array<double, 4>, 4> m1{};
    std::array<double, 4> m0{};
    std::array<double, 4> h{};  // homography coefficients a, b, c, d
};

CAffine to_c(const AffineMap& a) {
    CAffine c;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) c.m1[i][j] = to_double(a.m1[i][j]);
        c.m0[i] = to_double(a.m0[i]);
    }
    c.h = {to_double(a.xmap.a()), to_double(a.xmap.b()), to_double(a.xmap.c()),
           to_double(a.xmap.d())};
    return c;
}

// Generator maps and their inverses; every entry is a small dyadic, exact in double.
const CAffine& cmap(std::string_view name, int sign) {
    static const auto table = [] {
        std::map<std::string, std::pair<CAffine, CAffine>, std::less<>> t;
        for (const auto& g : generator_catalog())
            t.emplace(g.name, std::make_pair(to_c(g.map), to_c(inverse(g.map))));
        return t;
    }();
    auto it = table.find(name);
    if (it == table.end()) throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
    return sign < 0 ? it->second.second : it->second.first;
}

CTheta apply_c(const CAffine& a, const CTheta& v) {
    CTheta r;
    for (std::size_t i = 0; i < 4; ++i) {
        Complex s = a.m0[i];
        for (std::size_t k = 0; k < 4; ++k)
            if (a.m1[i][k] != 0) s += a.m1[i][k] * v[k];
        r[i] = s;
    }
    return r;
}

bool is_sign(std::string_view n) { return n == "Sa" || n == "Sb" || n == "Sc" || n == "Sd"; }

bool is_homography(std::string_view n) {
    return n == "Hbadc" || n == "Hdcba" || n == "Hcdab" || n == "Hadcb" || n == "Hcbad" ||
           n == "Habdc" || n == "Hacbd";
}

void require_nonzero(Complex v, const char* factor) {
    if (!(std::abs(v) >= 1e-14) || !std::isfinite(std::abs(v)))
        throw VanishingDenominator(std::string("vanishing denominator: ") + factor);
}

Jet image_jet(const CDual& x, const CDual& u, const char* who) {
    Jet out{x.v, u.v, u.d / x.d};
    check_guards(out, std::string(who) + " image");
    return out;
}

}  // namespace

CTheta apply_theta(const AffineMap& a, const CTheta& v) { return apply_c(to_c(a), v); }

Pushed push_trivial(std::string_view gen, const Jet& j, const CTheta& theta) {
    const std::string who(gen);
    if (!is_sign(gen) && !is_homography(gen))
        throw UnknownGenerator("'" + who + "' is not a sign change or homography");
    check_guards(j, who + " source");
    const CAffine& m = cmap(gen, 1);
    CTheta out_theta = apply_c(m, theta);
    if (is_sign(gen)) return {j, out_theta};

    const CDual X(j.x, 1.0), U(j.u, j.du);
    CDual x = X;
    if (m.h[2] != 0 || m.h[0] != m.h[3] || m.h[1] != 0)
        x = (Complex(m.h[0]) * X + Complex(m.h[1])) / (Complex(m.h[2]) * X + Complex(m.h[3]));
    const Complex one = 1.0;
    CDual u;
    if (gen == "Hbadc")
        u = x / U;
    else if (gen == "Hdcba")
        u = x + x * (x - one) / (U - x);
    else if (gen == "Hcdab")
        u = one + (one - x) / (U - one);
    else if (gen == "Hadcb")
        u = x + (one - x) * U;
    else if (gen == "Hcbad")
        u = one + one / (U - one);
    else if (gen == "Habdc")
        u = x * U;
    else  // Hacbd
        u = one - U;
    return {image_jet(x, u, who.c_str()), out_theta};
}

CmSum cm_sum(const Jet& j, const CTheta& t) {
    const Complex x = j.x, u = j.u;
    return {x * (x - 1.0) * j.du / (u * (u - 1.0) * (u - x)) + t[kZero] / u +
            t[kOne] / (u - 1.0) + (t[kX] - 1.0) / (u - x)};
}

Pushed push_tcm(const Jet& j, const CTheta& src) {
    check_guards(j, "Tcm source");
    const CTheta tgt = apply_c(cmap("Tcm", 1), src);
    const Complex shift = src[kInf] - tgt[kInf];
    if (std::abs(shift) < 1e-12 * (1.0 + std::abs(src[kInf])))
        throw DegenerateMap("T_CM degenerates when the two infinity exponents coincide");
    const Complex s = cm_sum(j, src).s;
    if (!(std::abs(s) >= 1e-14)) throw DegenerateMap("T_CM sum vanishes at x=" + std::to_string(j.x.real()));
    const Complex x = j.x;
    const Complex v = j.u - 2.0 * shift / s;
    const Complex rest = s - (tgt[kZero] / v + tgt[kOne] / (v - 1.0) + (tgt[kX] - 1.0) / (v - x));
    Jet out{x, v, rest * v * (v - 1.0) * (v - x) / (x * (x - 1.0))};
    check_guards(out, "Tcm image");
    return {out, tgt};
}

namespace {

template <class T>
std::array<T, 4> ms_factors_t(const T& x, const T& U, const T& dU, const CTheta& th) {
    const Complex one = 1.0;
    const Complex a = -th[kInf], b = -th[kOne];
    T lead = x * (one - x) * dU;
    T rn_common = lead + a * (U - one) * (U - x) - b * (U - x);
    T rd_common = lead + a * U * (U - one) + b * (x - one) * U;
    return {rn_common + (one + th[kX]) * x * (U - one), rn_common + (one - th[kX]) * x * (U - one),
            rd_common + th[kZero] * x * (U - one), rd_common - th[kZero] * x * (U - one)};
}

}  // namespace

MsFactors ms_factors(const Jet& j, const CTheta& th) {
    auto f = ms_factors_t<Complex>(j.x, j.u, j.du, th);
    return {f[0], f[1], f[2], f[3]};
}

Pushed push_tms(const Jet& j, const CTheta& th) {
    check_guards(j, "Tms source");
    const CTheta tgt = apply_c(cmap("Tms", 1), th);
    const Complex ddU = pvi_rhs(j, params_from_theta(th));
    const CDual x(j.x, 1.0), U(j.u, j.du), dU(j.du, ddU);
    auto f = ms_factors_t<CDual>(x, U, dU, th);
    require_nonzero(f[2].v, "R_d+");
    require_nonzero(f[3].v, "R_d-");
    CDual k = -(f[0] * f[1]) / (f[2] * f[3]);
    const Complex one = 1.0;
    CDual den = (U - x) - k * (x - one) * U;
    require_nonzero(den.v, "(U-x) - K(x-1)U");
    CDual u = x * (U - x) / den;
    return {image_jet(x, u, "Tms"), tgt};
}

Pushed push_njh(const Jet& j, const CTheta& th) {
    check_guards(j, "Tnjh source");
    const CTheta tgt = apply_c(cmap("Tnjh", -1), th);
    const Complex ddu = pvi_rhs(j, params_from_theta(th));
    const Complex one = 1.0;
    const CDual x(j.x, 1.0), u(j.u, j.du), du(j.du, ddu);
    CDual rd = x * (one - x) * du + th[kInf] * u * (u - one) + th[kOne] * (x - one) * u +
               th[kZero] * x * (u - one);
    require_nonzero(rd.v, "x(1-x)u' + θ∞u(u-1) + θ1(x-1)u + θ0x(u-1)");
    CDual U = (-x - 2.0 * (tgt[kInf] - th[kX]) * x * u * (u - one) / rd) / (u - x);
    CDual X = x / (x - one);
    return {image_jet(X, U, "Tnjh"), tgt};
}

// A token g pushes new → old through g; g^-1 pushes old → new.
TransformDirection direction_of(std::string_view, int sign) {
    return sign < 0 ? TransformDirection::OldToNew : TransformDirection::NewToOld;
}

bool direction_available(std::string_view gen, int sign) {
    if (is_sign(gen) || is_homography(gen) || gen == "Tcm") return true;
    if (gen == "Tms") return sign > 0;
    if (gen == "Tnjh") return sign < 0;
    return false;
}

std::string suggested_word(std::string_view gen, int sign) {
    const bool fwd = sign > 0;
    if (gen == "Tms") return fwd ? "Hcdab*Tcm*Sb*Sd*Tcm*Sa*Sc" : "Sc*Sa*Tcm*Sd*Sb*Tcm*Hcdab";
    if (gen == "Tnjh") return fwd ? "Hadcb*Tcm*Hbadc" : "Hbadc*Tcm*Hadcb";
    if (gen == "Tok") return fwd ? "Hdcba*(Tcm*Hbadc*Sa*Sd)^2" : "(Sd*Sa*Hbadc*Tcm)^2*Hdcba";
    if (gen == "Tfy")
        return fwd ? "Hbadc*Hacbd*Hcdab*Tcm*Sb*Sd*Tcm*Sa*Sc*Hacbd"
                   : "Hacbd*Sc*Sa*Tcm*Sd*Sb*Tcm*Hcdab*Hacbd*Hbadc";
    return std::string(gen) + (fwd ? "" : "^-1");
}

namespace {

struct Step {
    std::string name;
    int sign;
};

std::vector<Step> plan(const Word& w, Convention c) {
    std::vector<Step> steps;
    for (const auto& t : application_order(w, c)) {
        if (!is_generator(t.name)) throw UnknownGenerator("unknown generator '" + t.name + "'");
        if (!direction_available(t.name, t.power))
            throw DirectionUnavailable(to_string(t), suggested_word(t.name, t.power));
        steps.push_back({t.name, t.power});
    }
    return steps;
}

Pushed push_step(const Step& s, const Jet& j, const CTheta& th) {
    if (s.name == "Tcm") return push_tcm(j, th);
    if (s.name == "Tms") return push_tms(j, th);
    if (s.name == "Tnjh") return push_njh(j, th);
    return push_trivial(s.name, j, th);
}

}  // namespace

CTheta theta_after(const Word& w, const CTheta& theta, Convention c) {
    CTheta t = theta;
    for (const auto& step : application_order(w, c)) t = apply_c(cmap(step.name, step.power), t);
    return t;
}

Pushed push_word(const Word& w, const Jet& j, const CTheta& theta, Convention c) {
    auto steps = plan(w, c);
    Pushed cur{j, theta};
    for (std::size_t k = 0; k < steps.size(); ++k) {
        try {
            cur = push_step(steps[k], cur.jet, cur.theta);
        } catch (const Error& e) {
            rethrow_with_context(e, "step " + std::to_string(k) + " (" + steps[k].name + "): ");
        }
    }
    return cur;
}

SolutionTrace push_trace(const Word& w, const SolutionTrace& src, Convention c) {
    auto steps = plan(w, c);
    SolutionTrace out{theta_after(w, src.theta, c), {}, src.tol};
    out.samples.reserve(src.samples.size());
    for (std::size_t i = 0; i < src.samples.size(); ++i) {
        Pushed cur{src.samples[i], src.theta};
        for (std::size_t k = 0; k < steps.size(); ++k) {
            try {
                cur = push_step(steps[k], cur.jet, cur.theta);
            } catch (const Error& e) {
                rethrow_with_context(e, "sample " + std::to_string(i) + ", step " +
                                            std::to_string(k) + " (" + steps[k].name + "): ");
            }
        }
        out.samples.push_back(cur.jet);
    }
    return out;
}

}  // namespace p6
