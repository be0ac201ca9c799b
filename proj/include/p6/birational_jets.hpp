#pragma once

#include "p6/pvi_core.hpp"
#include "p6/theta_algebra.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace p6 {

// Old = (x, u, θ), new = (X, U, Θ), related by θ = m1·Θ + m0.
enum class TransformDirection { OldToNew, NewToOld };

struct Pushed {
    Jet jet;
    CTheta theta;
};

CTheta apply_theta(const AffineMap& a, const CTheta& v);

// Signs and the seven homographies, new → old.
Pushed push_trivial(std::string_view gen, const Jet& j, const CTheta& theta);

struct CmSum {
    Complex s;
};
// x(x−1)u′/(u(u−1)(u−x)) + θ0/u + θ1/(u−1) + (θx−1)/(u−x).
CmSum cm_sum(const Jet& j, const CTheta& theta);

// T_CM is an involution, so either side may be the source.
Pushed push_tcm(const Jet& j, const CTheta& source_theta);

struct MsFactors {
    Complex rn_plus, rn_minus, rd_plus, rd_minus;
    // (u − x)(U − x)/((x − 1)uU), the value the image must reproduce.
    Complex k() const { return -(rn_plus * rn_minus) / (rd_plus * rd_minus); }
};
MsFactors ms_factors(const Jet& j_new, const CTheta& new_theta);

// New → old, θ = Θ + (1,0,1,0).
Pushed push_tms(const Jet& j_new, const CTheta& new_theta);

// Old → new, Θ = inverse(T_NJH)(θ), X = x/(x − 1).
Pushed push_njh(const Jet& j_old, const CTheta& old_theta);

TransformDirection direction_of(std::string_view gen, int sign);
bool direction_available(std::string_view gen, int sign);
// Equivalent word (leftmost applied last) for a token with no direct formula.
std::string suggested_word(std::string_view gen, int sign);

CTheta theta_after(const Word& w, const CTheta& theta, Convention c = Convention::LeftAppliedLast);

Pushed push_word(const Word& w, const Jet& j, const CTheta& theta,
                 Convention c = Convention::LeftAppliedLast);

// Pushes every sample; the image trace keeps the source tolerance.
SolutionTrace push_trace(const Word& w, const SolutionTrace& source,
                         Convention c = Convention::LeftAppliedLast);

}  // namespace p6
