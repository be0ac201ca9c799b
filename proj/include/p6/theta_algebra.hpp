#pragma once

#include "p6/errors.hpp"
#include "p6/rational.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace p6 {

// Exponent slots, in the order (θ∞, θ0, θ1, θx) = letters (a, b, c, d).
enum Slot : std::size_t { kInf = 0, kZero = 1, kOne = 2, kX = 3 };

using QTheta = std::array<Rational, 4>;
using QMatrix = std::array<std::array<Rational, 4>, 4>;

QMatrix identity_matrix();
QTheta zero_theta();
QTheta make_theta(const Rational& inf, const Rational& zero, const Rational& one,
                  const Rational& x);
std::string to_string(const QTheta& v);

// x = (a X + b) / (c X + d), kept normalized: coprime integers, first nonzero
// entry positive. Equality is therefore plain coefficient equality.
class Homography {
public:
    Homography();
    Homography(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

    static Homography identity() { return {}; }

    const Rational& a() const { return c_[0]; }
    const Rational& b() const { return c_[1]; }
    const Rational& c() const { return c_[2]; }
    const Rational& d() const { return c_[3]; }

    bool is_identity() const;
    Homography inverse() const;

    // x as a function of X, and dx/dX.
    Rational apply(const Rational& X) const;
    std::complex<double> apply(std::complex<double> X) const;
    std::complex<double> derivative(std::complex<double> X) const;

    std::string to_string() const;

    friend bool operator==(const Homography&, const Homography&) = default;
    friend Homography operator*(const Homography& outer, const Homography& inner);

private:
    std::array<Rational, 4> c_;
};

Rational apply_x(const Homography& h, const Rational& X);
std::complex<double> apply_x(const Homography& h, std::complex<double> X);

struct Token {
    std::string name;
    int power = 1;
    friend bool operator==(const Token&, const Token&) = default;
};
using Word = std::vector<Token>;

std::string to_string(const Token& t);
std::string to_string(const Word& w);

// Grammar: generator names joined by '*', '^n' powers (n may be negative),
// parentheses; "1" or "" is the empty word. Parenthesized groups are expanded,
// atom powers are kept on their token.
Word parse_word(std::string_view text);

enum class Convention { LeftAppliedLast, LeftAppliedFirst };
std::string to_string(Convention c);
Convention parse_convention(std::string_view text);

// θ = m1·Θ + m0 and x = xmap(X).
struct AffineMap {
    QMatrix m1 = identity_matrix();
    QTheta m0 = zero_theta();
    Homography xmap;
    Word word;

    static AffineMap identity() { return {}; }
    bool is_identity() const;

    // Word is provenance only and is ignored.
    friend bool operator==(const AffineMap& l, const AffineMap& r) {
        return l.m1 == r.m1 && l.m0 == r.m0 && l.xmap == r.xmap;
    }
};

bool same_affine(const AffineMap& l, const AffineMap& r);

AffineMap compose(const AffineMap& outer, const AffineMap& inner);
AffineMap inverse(const AffineMap& a);
QTheta apply_theta(const AffineMap& a, const QTheta& v);
AffineMap power(const AffineMap& a, int n);

struct Generator {
    std::string name;     // word token, e.g. "Tcm"
    std::string display;  // e.g. "T_CM"
    AffineMap map;
};

const std::vector<Generator>& generator_catalog();
const AffineMap& generator(std::string_view name);
bool is_generator(std::string_view name);

// The T_CM matrix as transcribed, which equals compose(T_CM, H_badc).
AffineMap tcm_as_printed();

AffineMap evaluate_word(const Word& w, Convention c = Convention::LeftAppliedLast);
AffineMap evaluate_word(std::string_view text, Convention c = Convention::LeftAppliedLast);

// Expands powers into single steps listed in the order they act on Θ.
Word application_order(const Word& w, Convention c);

enum class Scope { Signs, XPreserving, Full };
std::string to_string(Scope s);

// Deterministic enumeration; index 0 is the identity. Signs: 16, XPreserving:
// 64 (signs, then each x-preserving homography times signs), Full: 384.
const std::vector<AffineMap>& trivial_group(Scope s);

struct Witness {
    std::size_t left_index = 0;
    std::size_t right_index = 0;
    AffineMap left;
    AffineMap right;
};

// First (L, R) in enumeration order with a = L·b·R in (m1, m0).
std::optional<Witness> equals_mod_trivial(const AffineMap& a, const AffineMap& b, Scope s);

struct OrderResult {
    std::optional<int> affine;
    std::optional<int> xmap;
};
OrderResult order_of(const AffineMap& a, int max_n);

enum class Verdict { Exact, ExactModSigns, ExactModTrivial, Fails };
std::string to_string(Verdict v);

struct Relation {
    std::string id;
    std::string lhs;
    std::string rhs;
};
const std::vector<Relation>& catalog_relations();

struct RelationVerdict {
    std::string id;
    std::string lhs;
    std::string rhs;
    Convention convention = Convention::LeftAppliedLast;
    Verdict verdict = Verdict::Fails;
    std::optional<std::pair<Word, Word>> witness;
    bool xmap_consistent = false;
};

RelationVerdict audit_relation(const Relation& r, Convention c, Scope widest = Scope::Full);
// Two verdicts per relation, last-convention first.
std::vector<RelationVerdict> audit_relations(Scope widest = Scope::Full);

struct OrbitPoint {
    QTheta theta;
    Word word;  // evaluate_word(word, LeftAppliedLast) maps start to theta
};

inline constexpr int kMaxOrbitDepth = 12;
std::vector<OrbitPoint> orbit_bfs(const QTheta& start, const std::vector<std::string>& generators,
                                  int depth);

}  // namespace p6
