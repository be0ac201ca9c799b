#include "p6/pvi_core.hpp"

#include <algorithm>
#include <cmath>

namespace p6 {

CTheta to_complex(const QTheta& q) {
    CTheta c;
    for (std::size_t i = 0; i < 4; ++i) c[i] = to_double(q[i]);
    return c;
}

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ParameterVector::ParameterVector(Complex a, Complex b, Complex g, Complex d) {
    if (!finite(a) || !finite(b) || !finite(g) || !finite(d))
        throw SingularConfiguration("non-finite PVI parameter");
    alpha = a;
    beta = b;
    gamma = g;
    delta = d;
}

ParameterVector params_from_theta(const CTheta& t) {
    return {t[kInf] * t[kInf] / 2.0, -t[kZero] * t[kZero] / 2.0, t[kOne] * t[kOne] / 2.0,
            (1.0 - t[kX] * t[kX]) / 2.0};
}

QParameters params_from_theta(const QTheta& t) {
    QParameters p;
    p.alpha = t[kInf] * t[kInf] / 2;
    p.beta = -t[kZero] * t[kZero] / 2;
    p.gamma = t[kOne] * t[kOne] / 2;
    p.delta = (1 - t[kX] * t[kX]) / 2;
    return p;
}

Branch parse_branch(std::string_view text) {
    if (text.size() != 4) throw ParseError("branch must be four '+'/'-' characters");
    Branch b;
    for (std::size_t i = 0; i < 4; ++i) {
        if (text[i] != '+' && text[i] != '-')
            throw ParseError("branch must be four '+'/'-' characters");
        b[i] = text[i] == '+';
    }
    return b;
}

std::string to_string(const Branch& b) {
    std::string s;
    for (bool plus : b) s += plus ? '+' : '-';
    return s;
}

CTheta theta_from_params(const ParameterVector& p, const Branch& b) {
    CTheta t{std::sqrt(2.0 * p.alpha), std::sqrt(-2.0 * p.beta), std::sqrt(2.0 * p.gamma),
             std::sqrt(1.0 - 2.0 * p.delta)};
    for (std::size_t i = 0; i < 4; ++i)
        if (!b[i]) t[i] = -t[i];
    return t;
}

bool guards_hold(const Jet& j) {
    if (!finite(j.x) || !finite(j.u) || !finite(j.du)) return false;
    double m = std::min({std::abs(j.u), std::abs(j.u - 1.0), std::abs(j.u - j.x), std::abs(j.x),
                         std::abs(j.x - 1.0)});
    return m >= kGuardDistance && std::abs(j.u) <= kGuardBlowup;
}

void check_guards(const Jet& j, const std::string& context) {
    if (!guards_hold(j))
        throw SingularConfiguration(context + ": jet outside the guarded region (x=" +
                                    std::to_string(j.x.real()) + "+" +
                                    std::to_string(j.x.imag()) + "i, u=" +
                                    std::to_string(j.u.real()) + "+" +
                                    std::to_string(j.u.imag()) + "i)");
}

Complex pvi_rhs(const Jet& j, const ParameterVector& p) {
    check_guards(j, "pvi_rhs");
    const Complex x = j.x, u = j.u, du = j.du;
    const Complex um1 = u - 1.0, umx = u - x, xm1 = x - 1.0;
    Complex first = 0.5 * (1.0 / u + 1.0 / um1 + 1.0 / umx) * du * du;
    Complex second = (1.0 / x + 1.0 / xm1 + 1.0 / umx) * du;
    Complex bracket = p.alpha + p.beta * x / (u * u) + p.gamma * xm1 / (um1 * um1) +
                      p.delta * x * xm1 / (umx * umx);
    return first - second + u * um1 * umx / (x * x * xm1 * xm1) * bracket;
}

Complex residual(Complex x, Complex u, Complex du, Complex ddu, const ParameterVector& p) {
    return ddu - pvi_rhs({x, u, du}, p);
}

// ---------------------------------------------------------------- integrator

namespace {

struct State {
    Complex u, du;
};

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
    State r = y;
    for (const auto& [c, k] : terms) {
        r.u += h * c * k->u;
        r.du += h * c * k->du;
    }
    return r;
}

// Dormand–Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

SolutionTrace integrate(const Jet& start, const CTheta& theta, const std::vector<Complex>& path,
                        const IntegrateOptions& opt) {
    check_guards(start, "integrate start");
    if (!(opt.tol > 0)) throw SingularConfiguration("integration tolerance must be positive");
    const ParameterVector p = params_from_theta(theta);

    Complex from = start.x;
    for (Complex to : path) {
        // Distance from the singular points 0 and 1 to the segment.
        for (Complex s : {Complex(0.0), Complex(1.0)}) {
            Complex d = to - from;
            double t = std::norm(d) > 0
                           ? std::clamp(std::real((s - from) * std::conj(d)) / std::norm(d), 0.0, 1.0)
                           : 0.0;
            if (std::abs(from + t * d - s) < kGuardDistance)
                throw SingularConfiguration("integration path passes through x = " +
                                            std::to_string(static_cast<int>(s.real())));
        }
        from = to;
    }

    SolutionTrace trace{theta, {start}, opt.tol};
    Jet cur = start;

    auto fail = [&](const char* kind, const std::string& what) {
        throw IntegrationError(kind, what, cur, trace);
    };

    for (Complex target : path) {
        const Complex seg = target - cur.x;
        const double len = std::abs(seg);
        if (len == 0) continue;
        const Complex dir = seg / len;
        const Complex x0 = cur.x;
        double s = 0;
        double h = opt.initial_step > 0 ? opt.initial_step : len / 100;
        if (opt.max_step > 0) h = std::min(h, opt.max_step);
        State y{cur.u, cur.du};
        auto rhs = [&](double t, const State& yy) -> State {
            Jet j{x0 + t * dir, yy.u, yy.du};
            return {yy.du * dir, pvi_rhs(j, p) * dir};
        };
        State k1 = rhs(s, y);
        bool guard_rejected = false;
        while (s < len) {
            bool last = false;
            if (s + h >= len * (1 - 1e-12)) {
                h = len - s;
                last = true;
            }
            if (h < 1e-14 * std::max(1.0, len)) {
                // Steps collapsing against the guards means the solution is running into a pole.
                if (guard_rejected)
                    fail("pole-detected", "guard tripped while approaching x=" + std::to_string(cur.x.real()));
                fail("step-underflow", "step size underflow at x=" + std::to_string(cur.x.real()));
            }
            State y5, k7;
            double err;
            try {
                State k2 = rhs(s + c2 * h, axpy(y, h, {{a21, &k1}}));
                State k3 = rhs(s + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
                State k4 = rhs(s + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
                State k5 = rhs(s + c5 * h,
                               axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
                State k6 = rhs(s + h, axpy(y, h,
                                           {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4},
                                            {a65, &k5}}));
                y5 = axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
                k7 = rhs(s + h, y5);
                State e = axpy(State{0.0, 0.0}, h,
                               {{e1, &k1}, {e3, &k3}, {e4, &k4}, {e5, &k5}, {e6, &k6}, {e7, &k7}});
                double su = opt.tol * (1.0 + std::max(std::abs(y.u), std::abs(y5.u)));
                double sd = opt.tol * (1.0 + std::max(std::abs(y.du), std::abs(y5.du)));
                err = std::max(std::abs(e.u) / su, std::abs(e.du) / sd);
                if (!std::isfinite(err)) err = 1e10;
            } catch (const SingularConfiguration&) {
                // A stage left the guarded region: shrink and retry.
                err = 1e10;
                guard_rejected = true;
            }
            if (err <= 1.0) {
                guard_rejected = false;
                s = last ? len : s + h;
                Jet next{last ? target : x0 + s * dir, y5.u, y5.du};
                if (!guards_hold(next))
                    fail("pole-detected", "guard tripped near x=" + std::to_string(next.x.real()) +
                                              (next.x.imag() != 0 ? "+" + std::to_string(next.x.imag()) + "i" : ""));
                if (trace.samples.size() >= opt.max_samples)
                    fail("max-samples", "sample budget of " + std::to_string(opt.max_samples) +
                                            " exhausted");
                trace.samples.push_back(next);
                cur = next;
                y = y5;
                k1 = k7;
                double grow = err > 0 ? 0.9 * std::pow(err, -0.2) : 5.0;
                h *= std::clamp(grow, 0.2, 5.0);
            } else {
                h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
                if (err >= 1e10 && !guards_hold(Jet{x0 + s * dir, y.u, y.du}))
                    fail("pole-detected", "guard tripped");
            }
            if (opt.max_step > 0) h = std::min(h, opt.max_step);
        }
    }
    return trace;
}

// ---------------------------------------------------------------- finite differences

Complex numerical_derivative(const std::function<Complex(Complex)>& f, Complex x0, double h) {
    auto d5 = [&](double hh) {
        return (f(x0 - 2.0 * hh) - 8.0 * f(x0 - hh) + 8.0 * f(x0 + hh) - f(x0 + 2.0 * hh)) /
               (12.0 * hh);
    };
    Complex coarse = d5(h), fine = d5(h / 2);
    return fine + (fine - coarse) / 15.0;
}

std::array<std::array<Complex, 5>, 3> fd_weights(const std::array<Complex, 5>& z, Complex x0) {
    // Fornberg's recursion for derivative orders 0..2.
    constexpr int n = 4, m = 2;
    std::array<std::array<Complex, 5>, 3> c{};
    Complex c1 = 1.0, c4 = z[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        int mn = std::min(i, m);
        Complex c2 = 1.0, c5 = c4;
        c4 = z[i] - x0;
        for (int j = 0; j < i; ++j) {
            Complex c3 = z[i] - z[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[k][i] = c1 * (static_cast<double>(k) * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[k][j] = (c4 * c[k][j] - static_cast<double>(k) * c[k - 1][j]) / c3;
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    return c;
}

double rel_gap(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

TraceDefects trace_defects(const std::vector<Jet>& s, const ParameterVector& p) {
    TraceDefects d;
    if (s.size() < 5) return d;
    for (std::size_t i = 2; i + 2 < s.size(); ++i) {
        std::array<Complex, 5> nodes{s[i - 2].x, s[i - 1].x, s[i].x, s[i + 1].x, s[i + 2].x};
        auto w = fd_weights(nodes, s[i].x);
        Complex d1 = 0, d2 = 0;
        for (std::size_t k = 0; k < 5; ++k) {
            d1 += w[1][k] * s[i - 2 + k].u;
            d2 += w[2][k] * s[i - 2 + k].u;
        }
        double jet = rel_gap(d1, s[i].du);
        double res = rel_gap(d2, pvi_rhs(s[i], p));
        if (jet > d.max_jet_defect) {
            d.max_jet_defect = jet;
            d.jet_index = i;
        }
        if (res > d.max_residual) {
            d.max_residual = res;
            d.residual_index = i;
        }
        ++d.interior;
    }
    return d;
}

}  // namespace p6
