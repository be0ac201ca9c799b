#include "p6/theta_algebra.hpp"

#include "p6/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace p6 {

QMatrix identity_matrix() {
    QMatrix m;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m[i][j] = (i == j) ? 1 : 0;
    return m;
}

QTheta zero_theta() { return {Rational(0), Rational(0), Rational(0), Rational(0)}; }

QTheta make_theta(const Rational& inf, const Rational& zero, const Rational& one,
                  const Rational& x) {
    return {inf, zero, one, x};
}

std::string to_string(const QTheta& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------------- Homography

namespace {

Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }

Integer gcd_int(Integer a, Integer b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Homography::Homography() : c_{Rational(1), Rational(0), Rational(0), Rational(1)} {}

Homography::Homography(const Rational& a, const Rational& b, const Rational& c,
                       const Rational& d)
    : c_{a, b, c, d} {
    if (a * d - b * c == 0) throw SingularConfiguration("homography with zero determinant");
    Integer l = 1;
    for (const auto& q : c_) l = l / gcd_int(l, denominator(q)) * denominator(q);
    Integer g = 0;
    for (auto& q : c_) {
        q *= l;
        g = gcd_int(g, numerator(q));
    }
    for (auto& q : c_) q /= g;
    for (const auto& q : c_) {
        if (q == 0) continue;
        if (q < 0)
            for (auto& r : c_) r = -r;
        break;
    }
}

bool Homography::is_identity() const { return *this == Homography(); }

Homography Homography::inverse() const { return {d(), -b(), -c(), a()}; }

Homography operator*(const Homography& o, const Homography& i) {
    return {o.a() * i.a() + o.b() * i.c(), o.a() * i.b() + o.b() * i.d(),
            o.c() * i.a() + o.d() * i.c(), o.c() * i.b() + o.d() * i.d()};
}

Rational Homography::apply(const Rational& X) const {
    Rational den = c() * X + d();
    if (den == 0) throw HomographyPole("homography " + to_string() + " has a pole at " + p6::to_string(X));
    return (a() * X + b()) / den;
}

std::complex<double> Homography::apply(std::complex<double> X) const {
    std::complex<double> den = to_double(c()) * X + to_double(d());
    if (den == 0.0) throw HomographyPole("homography " + to_string() + " evaluated at its pole");
    return (to_double(a()) * X + to_double(b())) / den;
}

std::complex<double> Homography::derivative(std::complex<double> X) const {
    std::complex<double> den = to_double(c()) * X + to_double(d());
    if (den == 0.0) throw HomographyPole("homography " + to_string() + " evaluated at its pole");
    return to_double(a() * d() - b() * c()) / (den * den);
}

namespace {

std::string linear_form(const Rational& a, const Rational& b) {
    std::string s;
    if (a != 0) {
        if (a == 1)
            s = "X";
        else if (a == -1)
            s = "-X";
        else
            s = to_string(a) + "X";
    }
    if (b != 0) {
        if (s.empty())
            s = to_string(b);
        else
            s += (b > 0 ? "+" : "-") + to_string(b > 0 ? b : Rational(-b));
    }
    return s.empty() ? "0" : s;
}

}  // namespace

std::string Homography::to_string() const {
    if (c() == 0) return "x = " + linear_form(a() / d(), b() / d());
    std::string num = linear_form(a(), b());
    std::string den = linear_form(c(), d());
    if (num.find_first_of("+-", 1) != std::string::npos) num = "(" + num + ")";
    if (den.find_first_of("+-", 1) != std::string::npos) den = "(" + den + ")";
    return "x = " + num + "/" + den;
}

Rational apply_x(const Homography& h, const Rational& X) { return h.apply(X); }
std::complex<double> apply_x(const Homography& h, std::complex<double> X) { return h.apply(X); }

// ---------------------------------------------------------------- words

std::string to_string(const Token& t) {
    if (t.power == 1) return t.name;
    return t.name + "^" + std::to_string(t.power);
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += to_string(w[i]);
    }
    return s;
}

namespace {

constexpr std::size_t kMaxWordTokens = 100000;

Word invert_word(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->name, -it->power});
    return r;
}

class WordParser {
public:
    explicit WordParser(std::string_view s) : s_(s) {}

    Word parse() {
        skip();
        if (pos_ == s_.size()) return {};
        Word w = word();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return w;
    }

private:
    Word word() {
        Word w = term();
        for (;;) {
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                append(w, term());
            } else {
                return w;
            }
        }
    }

    Word term() {
        skip();
        if (pos_ == s_.size()) fail("expected a generator");
        Word base;
        bool atom = false;
        if (s_[pos_] == '(') {
            ++pos_;
            skip();
            if (pos_ < s_.size() && s_[pos_] == ')')
                fail("empty parentheses");
            base = word();
            skip();
            if (pos_ == s_.size() || s_[pos_] != ')') fail("missing ')'");
            ++pos_;
        } else if (s_[pos_] == '1') {
            ++pos_;
        } else if (std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t b = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name(s_.substr(b, pos_ - b));
            if (!is_generator(name)) throw UnknownGenerator("unknown generator '" + name + "'");
            base.push_back({name, 1});
            atom = true;
        } else {
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            long n = exponent();
            if (atom) {
                if (n == 0) return {};
                base[0].power = static_cast<int>(n);
                return base;
            }
            Word unit = n < 0 ? invert_word(base) : base;
            Word out;
            for (long k = 0; k < (n < 0 ? -n : n); ++k) append(out, unit);
            return out;
        }
        return base;
    }

    long exponent() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        std::size_t b = pos_;
        long n = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            n = n * 10 + (s_[pos_] - '0');
            if (n > 100000) fail("exponent too large");
            ++pos_;
        }
        if (b == pos_) fail("expected an integer exponent");
        return neg ? -n : n;
    }

    void append(Word& w, const Word& more) {
        if (w.size() + more.size() > kMaxWordTokens) fail("word too long after expansion");
        w.insert(w.end(), more.begin(), more.end());
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("word '" + std::string(s_) + "' at offset " + std::to_string(pos_) +
                         ": " + why);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

std::string to_string(Convention c) {
    return c == Convention::LeftAppliedLast ? "last" : "first";
}

Convention parse_convention(std::string_view text) {
    if (text == "last") return Convention::LeftAppliedLast;
    if (text == "first") return Convention::LeftAppliedFirst;
    throw ParseError("convention must be 'last' or 'first', got '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- affine maps

bool AffineMap::is_identity() const {
    return m1 == identity_matrix() && m0 == zero_theta() && xmap.is_identity();
}

bool same_affine(const AffineMap& l, const AffineMap& r) { return l.m1 == r.m1 && l.m0 == r.m0; }

namespace {

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    QMatrix r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < 4; ++k)
                if (a[i][k] != 0 && b[k][j] != 0) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

QTheta mat_vec(const QMatrix& a, const QTheta& v) {
    QTheta r;
    for (std::size_t i = 0; i < 4; ++i) {
        Rational s = 0;
        for (std::size_t k = 0; k < 4; ++k)
            if (a[i][k] != 0 && v[k] != 0) s += a[i][k] * v[k];
        r[i] = s;
    }
    return r;
}

QMatrix mat_inverse(QMatrix a) {
    QMatrix r = identity_matrix();
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t piv = col;
        while (piv < 4 && a[piv][col] == 0) ++piv;
        if (piv == 4) throw SingularConfiguration("affine map with singular m1");
        std::swap(a[piv], a[col]);
        std::swap(r[piv], r[col]);
        Rational inv = 1 / a[col][col];
        for (std::size_t j = 0; j < 4; ++j) {
            a[col][j] *= inv;
            r[col][j] *= inv;
        }
        for (std::size_t i = 0; i < 4; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = 0; j < 4; ++j) {
                a[i][j] -= f * a[col][j];
                r[i][j] -= f * r[col][j];
            }
        }
    }
    return r;
}

}  // namespace

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
    AffineMap r;
    r.m1 = mat_mul(outer.m1, inner.m1);
    r.m0 = mat_vec(outer.m1, inner.m0);
    for (std::size_t i = 0; i < 4; ++i) r.m0[i] += outer.m0[i];
    r.xmap = outer.xmap * inner.xmap;
    r.word = outer.word;
    r.word.insert(r.word.end(), inner.word.begin(), inner.word.end());
    return r;
}

AffineMap inverse(const AffineMap& a) {
    AffineMap r;
    r.m1 = mat_inverse(a.m1);
    r.m0 = mat_vec(r.m1, a.m0);
    for (auto& v : r.m0) v = -v;
    r.xmap = a.xmap.inverse();
    r.word = invert_word(a.word);
    return r;
}

QTheta apply_theta(const AffineMap& a, const QTheta& v) {
    QTheta r = mat_vec(a.m1, v);
    for (std::size_t i = 0; i < 4; ++i) r[i] += a.m0[i];
    return r;
}

AffineMap power(const AffineMap& a, int n) {
    AffineMap base = n < 0 ? inverse(a) : a;
    AffineMap r;
    for (int k = 0; k < (n < 0 ? -n : n); ++k) r = compose(r, base);
    return r;
}

// ---------------------------------------------------------------- catalog

namespace {

AffineMap permutation(const std::string& name, std::array<std::size_t, 4> p, Homography h) {
    AffineMap m;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.m1[i][j] = (p[i] == j) ? 1 : 0;
    m.xmap = h;
    m.word = {{name, 1}};
    return m;
}

AffineMap sign_flip(const std::string& name, std::size_t slot) {
    AffineMap m;
    m.m1[slot][slot] = -1;
    m.word = {{name, 1}};
    return m;
}

AffineMap half_matrix(const std::string& name, const std::array<std::array<int, 4>, 4>& rows,
                      Homography h) {
    AffineMap m;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) m.m1[i][j] = Rational(rows[i][j], 2);
        m.m0[i] = Rational(1, 2);
    }
    m.xmap = h;
    m.word = {{name, 1}};
    return m;
}

AffineMap translation(const std::string& name, std::array<int, 4> shift, Homography h) {
    AffineMap m;
    for (std::size_t i = 0; i < 4; ++i) m.m0[i] = shift[i];
    m.xmap = h;
    m.word = {{name, 1}};
    return m;
}

const Homography kXOverXm1(1, 0, 1, -1);
const Homography kOneOverX(0, 1, 1, 0);
const Homography kOneMinusX(-1, 1, 0, 1);

std::vector<Generator> build_catalog() {
    std::vector<Generator> g;
    g.push_back({"Sa", "S_a", sign_flip("Sa", kInf)});
    g.push_back({"Sb", "S_b", sign_flip("Sb", kZero)});
    g.push_back({"Sc", "S_c", sign_flip("Sc", kOne)});
    g.push_back({"Sd", "S_d", sign_flip("Sd", kX)});
    g.push_back({"Hbadc", "H_badc", permutation("Hbadc", {1, 0, 3, 2}, {})});
    g.push_back({"Hdcba", "H_dcba", permutation("Hdcba", {3, 2, 1, 0}, {})});
    g.push_back({"Hcdab", "H_cdab", permutation("Hcdab", {2, 3, 0, 1}, {})});
    g.push_back({"Hadcb", "H_adcb", permutation("Hadcb", {0, 3, 2, 1}, kXOverXm1)});
    g.push_back({"Hcbad", "H_cbad", permutation("Hcbad", {2, 1, 0, 3}, kXOverXm1)});
    g.push_back({"Habdc", "H_abdc", permutation("Habdc", {0, 1, 3, 2}, kOneOverX)});
    g.push_back({"Hacbd", "H_acbd", permutation("Hacbd", {0, 2, 1, 3}, kOneMinusX)});
    AffineMap fy = permutation("Tfy", {1, 0, 3, 2}, kOneOverX);
    fy.m0 = {Rational(1), Rational(1), Rational(0), Rational(0)};
    g.push_back({"Tfy", "T_FY", fy});
    g.push_back({"Tok", "T_Ok", translation("Tok", {1, 0, 0, 1}, {})});
    g.push_back({"Tms", "T_MS", translation("Tms", {1, 0, 1, 0}, {})});
    g.push_back({"Tnjh", "T_NJH",
                 half_matrix("Tnjh",
                             {{{-1, 1, -1, -1}, {-1, -1, 1, -1}, {-1, -1, -1, 1}, {1, -1, -1, -1}}},
                             kXOverXm1)});
    // Affine action realized by the T_CM birational formula: m1 = I - J/2.
    g.push_back({"Tcm", "T_CM",
                 half_matrix("Tcm",
                             {{{1, -1, -1, -1}, {-1, 1, -1, -1}, {-1, -1, 1, -1}, {-1, -1, -1, 1}}},
                             {})});
    return g;
}

}  // namespace

const std::vector<Generator>& generator_catalog() {
    static const std::vector<Generator> catalog = build_catalog();
    return catalog;
}

bool is_generator(std::string_view name) {
    for (const auto& g : generator_catalog())
        if (g.name == name) return true;
    return false;
}

const AffineMap& generator(std::string_view name) {
    for (const auto& g : generator_catalog())
        if (g.name == name) return g.map;
    throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
}

AffineMap tcm_as_printed() {
    return half_matrix("TcmPrinted",
                       {{{-1, 1, -1, -1}, {1, -1, -1, -1}, {-1, -1, -1, 1}, {-1, -1, 1, -1}}}, {});
}

AffineMap evaluate_word(const Word& w, Convention c) {
    AffineMap r;
    for (const auto& t : w) {
        AffineMap step = power(generator(t.name), t.power);
        r = c == Convention::LeftAppliedLast ? compose(r, step) : compose(step, r);
    }
    r.word = w;
    return r;
}

AffineMap evaluate_word(std::string_view text, Convention c) {
    return evaluate_word(parse_word(text), c);
}

Word application_order(const Word& w, Convention c) {
    Word steps;
    auto expand = [&steps](const Token& t) {
        int n = t.power < 0 ? -t.power : t.power;
        for (int k = 0; k < n; ++k) steps.push_back({t.name, t.power < 0 ? -1 : 1});
    };
    if (c == Convention::LeftAppliedLast)
        for (auto it = w.rbegin(); it != w.rend(); ++it) expand(*it);
    else
        for (const auto& t : w) expand(t);
    return steps;
}

// ---------------------------------------------------------------- trivial group

std::string to_string(Scope s) {
    switch (s) {
        case Scope::Signs: return "signs";
        case Scope::XPreserving: return "x-preserving";
        case Scope::Full: return "full";
    }
    return "full";
}

namespace {

using AffineKey = std::pair<QMatrix, QTheta>;

AffineKey key_of(const AffineMap& a) { return {a.m1, a.m0}; }

std::vector<AffineMap> build_signs() {
    static const char* names[4] = {"Sa", "Sb", "Sc", "Sd"};
    std::vector<AffineMap> out;
    for (unsigned mask = 0; mask < 16; ++mask) {
        AffineMap m;
        for (std::size_t i = 0; i < 4; ++i)
            if (mask & (1u << i)) m = compose(m, generator(names[i]));
        out.push_back(m);
    }
    return out;
}

std::vector<AffineMap> build_x_preserving() {
    std::vector<AffineMap> out = build_signs();
    std::vector<AffineMap> signs = out;
    for (const char* h : {"Hbadc", "Hdcba", "Hcdab"})
        for (const auto& s : signs) out.push_back(compose(generator(h), s));
    return out;
}

std::vector<AffineMap> build_full() {
    std::vector<AffineMap> out = build_x_preserving();
    std::map<AffineKey, std::size_t> seen;
    for (std::size_t i = 0; i < out.size(); ++i) seen.emplace(key_of(out[i]), i);
    static const char* gens[] = {"Sa",    "Sb",    "Sc",    "Sd",    "Hbadc", "Hdcba",
                                 "Hcdab", "Hadcb", "Hcbad", "Habdc", "Hacbd"};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const char* g : gens) {
            AffineMap next = compose(generator(g), out[i]);
            if (seen.emplace(key_of(next), out.size()).second) out.push_back(std::move(next));
        }
    }
    return out;
}

}  // namespace

const std::vector<AffineMap>& trivial_group(Scope s) {
    static const std::vector<AffineMap> signs = build_signs();
    static const std::vector<AffineMap> xpres = build_x_preserving();
    static const std::vector<AffineMap> full = build_full();
    switch (s) {
        case Scope::Signs: return signs;
        case Scope::XPreserving: return xpres;
        case Scope::Full: return full;
    }
    return full;
}

std::optional<Witness> equals_mod_trivial(const AffineMap& a, const AffineMap& b, Scope s) {
    const auto& group = trivial_group(s);
    std::map<AffineKey, std::size_t> right;
    for (std::size_t r = 0; r < group.size(); ++r)
        right.emplace(key_of(compose(b, group[r])), r);
    for (std::size_t l = 0; l < group.size(); ++l) {
        auto it = right.find(key_of(compose(inverse(group[l]), a)));
        if (it != right.end()) return Witness{l, it->second, group[l], group[it->second]};
    }
    return std::nullopt;
}

OrderResult order_of(const AffineMap& a, int max_n) {
    OrderResult res;
    AffineMap p;
    for (int n = 1; n <= max_n; ++n) {
        p = compose(a, p);
        if (!res.affine && same_affine(p, AffineMap::identity())) res.affine = n;
        if (!res.xmap && p.xmap.is_identity()) res.xmap = n;
        if (res.affine && res.xmap) break;
    }
    return res;
}

// ---------------------------------------------------------------- relations

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Exact: return "exact";
        case Verdict::ExactModSigns: return "exact-mod-signs";
        case Verdict::ExactModTrivial: return "exact-mod-trivial";
        case Verdict::Fails: return "fails";
    }
    return "fails";
}

const std::vector<Relation>& catalog_relations() {
    static const std::vector<Relation> rel = {
        {"fy-from-ms", "Tfy", "Hbadc*Hacbd*Tms*Hacbd"},
        {"ms-from-fy", "Tms", "Hacbd*Hbadc*Tfy*Hacbd"},
        {"ok-from-ms", "Tok", "Habdc*Tms*Habdc"},
        {"ms-from-ok", "Tms", "Habdc*Tok*Habdc"},
        {"njh-from-cm", "Tnjh", "Hadcb*Tcm*Hbadc"},
        {"cm-from-njh", "Tcm", "Hadcb*Tnjh*Hbadc"},
        {"ok-from-cm-square", "Tok", "Hdcba*(Tcm*Hbadc*Sa*Sd)^2"},
        {"ok-from-cm-cube", "Tok", "Hcbad*Sa*Sb*(Sa*Tcm*Hbadc)^3*Sc*Sd*Hcbad"},
        {"cm-order-2", "Tcm^2", "1"},
        {"sa-cm-order-3", "(Sa*Tcm)^3", "1"},
        {"sa-sb-cm-badc-order-4", "(Sa*Sb*Tcm*Hbadc)^4", "1"},
        {"sa-cm-badc-order-6", "(Sa*Tcm*Hbadc)^6", "1"},
        {"badc-square", "Hbadc^2", "1"},
        {"dcba-square", "Hdcba^2", "1"},
        {"cdab-square", "Hcdab^2", "1"},
        {"klein-product", "Hbadc*Hdcba*Hcdab", "1"},
    };
    return rel;
}

RelationVerdict audit_relation(const Relation& r, Convention c, Scope widest) {
    RelationVerdict v{r.id, r.lhs, r.rhs, c, Verdict::Fails, std::nullopt, false};
    AffineMap lhs = evaluate_word(r.lhs, c);
    AffineMap rhs = evaluate_word(r.rhs, c);
    v.xmap_consistent = lhs.xmap == rhs.xmap;
    if (same_affine(lhs, rhs)) {
        v.verdict = Verdict::Exact;
        v.witness = std::make_pair(Word{}, Word{});
        return v;
    }
    std::vector<Scope> scopes{Scope::Signs};
    if (widest != Scope::Signs) scopes.push_back(Scope::XPreserving);
    if (widest == Scope::Full) scopes.push_back(Scope::Full);
    for (Scope s : scopes) {
        if (auto w = equals_mod_trivial(lhs, rhs, s)) {
            v.verdict = s == Scope::Signs ? Verdict::ExactModSigns : Verdict::ExactModTrivial;
            v.witness = std::make_pair(w->left.word, w->right.word);
            return v;
        }
    }
    return v;
}

std::vector<RelationVerdict> audit_relations(Scope widest) {
    std::vector<RelationVerdict> out;
    for (const auto& r : catalog_relations()) {
        out.push_back(audit_relation(r, Convention::LeftAppliedLast, widest));
        out.push_back(audit_relation(r, Convention::LeftAppliedFirst, widest));
    }
    return out;
}

// ---------------------------------------------------------------- orbit

namespace {

bool word_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [](const Token& x, const Token& y) { return to_string(x) < to_string(y); });
}

}  // namespace

std::vector<OrbitPoint> orbit_bfs(const QTheta& start, const std::vector<std::string>& generators,
                                  int depth) {
    if (depth < 0 || depth > kMaxOrbitDepth)
        throw DepthLimit("orbit depth must lie in [0, " + std::to_string(kMaxOrbitDepth) + "]");
    struct Move {
        Token token;
        AffineMap map;
    };
    std::vector<Move> moves;
    for (const auto& name : generators) {
        const AffineMap& g = generator(name);
        moves.push_back({{name, 1}, g});
        AffineMap gi = inverse(g);
        if (!same_affine(gi, g)) moves.push_back({{name, -1}, gi});
    }
    std::vector<OrbitPoint> out{{start, {}}};
    std::map<QTheta, std::size_t> seen{{start, 0}};
    std::vector<std::size_t> frontier{0};
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        std::map<QTheta, Word> found;
        for (std::size_t idx : frontier) {
            for (const auto& mv : moves) {
                QTheta v = apply_theta(mv.map, out[idx].theta);
                if (seen.count(v)) continue;
                Word w{mv.token};
                w.insert(w.end(), out[idx].word.begin(), out[idx].word.end());
                auto it = found.find(v);
                if (it == found.end())
                    found.emplace(v, std::move(w));
                else if (word_less(w, it->second))
                    it->second = std::move(w);
            }
        }
        std::vector<OrbitPoint> level_points;
        for (auto& [v, w] : found) level_points.push_back({v, std::move(w)});
        std::sort(level_points.begin(), level_points.end(),
                  [](const OrbitPoint& a, const OrbitPoint& b) { return word_less(a.word, b.word); });
        frontier.clear();
        for (auto& p : level_points) {
            seen.emplace(p.theta, out.size());
            frontier.push_back(out.size());
            out.push_back(std::move(p));
        }
    }
    return out;
}

}  // namespace p6
