#pragma once

#include "p6/errors.hpp"
#include "p6/theta_algebra.hpp"

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace p6 {

using Complex = std::complex<double>;
using CTheta = std::array<Complex, 4>;

CTheta to_complex(const QTheta& q);

template <class S>
struct Parameters {
    S alpha{}, beta{}, gamma{}, delta{};
    friend bool operator==(const Parameters&, const Parameters&) = default;
};

struct ParameterVector : Parameters<Complex> {
    ParameterVector() = default;
    ParameterVector(Complex a, Complex b, Complex g, Complex d);  // rejects non-finite
};
using QParameters = Parameters<Rational>;

// α = θ∞²/2, β = −θ0²/2, γ = θ1²/2, δ = (1 − θx²)/2.
ParameterVector params_from_theta(const CTheta& t);
QParameters params_from_theta(const QTheta& t);

// Per-slot sign applied to the principal square root; true means '+'.
using Branch = std::array<bool, 4>;
Branch parse_branch(std::string_view text);  // e.g. "++-+"
std::string to_string(const Branch& b);
CTheta theta_from_params(const ParameterVector& p, const Branch& b);

struct Jet {
    Complex x, u, du;
    friend bool operator==(const Jet&, const Jet&) = default;
};

inline constexpr double kGuardDistance = 1e-10;
inline constexpr double kGuardBlowup = 1e10;

bool guards_hold(const Jet& j);
void check_guards(const Jet& j, const std::string& context);

// u″ from PVI.
Complex pvi_rhs(const Jet& j, const ParameterVector& p);
Complex residual(Complex x, Complex u, Complex du, Complex ddu, const ParameterVector& p);

struct SolutionTrace {
    CTheta theta{};
    std::vector<Jet> samples;
    double tol = 0;
};

struct IntegrateOptions {
    double tol = 1e-10;
    std::size_t max_samples = 200000;
    double max_step = 0;      // along the path, 0 means uncapped
    double initial_step = 0;  // 0 picks one from the segment length
};

class IntegrationError : public Error {
public:
    IntegrationError(std::string kind, const std::string& what, Jet last, SolutionTrace partial)
        : Error(std::move(kind), what), last_(last), partial_(std::move(partial)) {}
    const Jet& last_jet() const noexcept { return last_; }
    const SolutionTrace& partial_trace() const noexcept { return partial_; }

private:
    Jet last_;
    SolutionTrace partial_;
};

// Dormand–Prince 5(4) on (u, u′) along the polyline start.x → path[0] → ...
// Samples are recorded at accepted steps, starting with `start`.
SolutionTrace integrate(const Jet& start, const CTheta& theta, const std::vector<Complex>& path,
                        const IntegrateOptions& opt = {});

// Five-point central difference with one Richardson step (h and h/2).
Complex numerical_derivative(const std::function<Complex(Complex)>& f, Complex x0, double h);

// Five-point finite-difference weights on arbitrary nodes: w[k][i] is the
// weight of node i for the k-th derivative at x0.
std::array<std::array<Complex, 5>, 3> fd_weights(const std::array<Complex, 5>& nodes, Complex x0);

// |a − b| / max(1, |b|).
double rel_gap(Complex a, Complex b);

struct TraceDefects {
    double max_residual = 0;    // FD u″ against pvi_rhs
    double max_jet_defect = 0;  // FD u′ against the stored derivative
    std::size_t residual_index = 0;
    std::size_t jet_index = 0;
    std::size_t interior = 0;
};

// Interior samples only (two neighbours on each side).
TraceDefects trace_defects(const std::vector<Jet>& samples, const ParameterVector& p);

}  // namespace p6
