#ifndef BIGRES_POLYNOMIAL_HPP
#define BIGRES_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace bigres {

struct Term {
    Monomial m;
    Rational c;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept
/// strictly decreasing in the ring's monomial order with no zero
/// coefficients, so structural equality is mathematical equality.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, const Rational& c) {
        Polynomial p(ring);
        if (c != 0) p.terms_.push_back({ring->one(), c});
        return p;
    }
    static Polynomial variable(RingPtr ring, std::size_t i) {
        Polynomial p(ring);
        p.terms_.push_back({ring->variable(i), Rational(1)});
        return p;
    }
    static Polynomial variable(RingPtr ring, std::string_view name) {
        auto i = ring->index_of(name);
        if (!i) throw InvalidInputError("unknown variable '" + std::string(name) + "'");
        return variable(std::move(ring), *i);
    }
    static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1) {
        Polynomial p(ring);
        if (c != 0) p.terms_.push_back({m, c});
        return p;
    }
    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }
    /// Trusted constructor: terms already sorted, distinct and nonzero.
    static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms) {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(terms);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Term& leading_term() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().m; }
    const Rational& leading_coefficient() const { return terms_.front().c; }

    Rational constant_term() const {
        for (const auto& t : terms_)
            if (t.m.is_one()) return t.c;
        return 0;
    }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = add(*this, o, Rational(1)); }
    Polynomial& operator-=(const Polynomial& o) { return *this = add(*this, o, Rational(-1)); }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& t : terms_) t.c *= c;
        }
        return *this;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add(a, b, Rational(1)); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return add(a, b, Rational(-1)); }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        const RingPtr& r = pick_ring(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(r);
        if (a.size() < b.size()) return b * a;
        if (b.size() == 1) return a.mul_term(b.terms_[0].m, b.terms_[0].c);
        std::vector<Term> out;
        out.reserve(a.size() * b.size());
        for (const auto& tb : b.terms_)
            for (const auto& ta : a.terms_) out.push_back({ta.m * tb.m, ta.c * tb.c});
        return from_terms(r, std::move(out));
    }

    /// Multiplication by c*m preserves the term order.
    Polynomial mul_term(const Monomial& m, const Rational& c) const {
        Polynomial r(ring_);
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
        return true;
    }

    Polynomial derivative(std::size_t var) const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            if (t.m[var] == 0) continue;
            Monomial m = t.m;
            m.set(var, t.m[var] - 1u);
            out.push_back({m, t.c * t.m[var]});
        }
        return from_terms(ring_, std::move(out));
    }

    /// Scales so the leading coefficient is 1.
    Polynomial monic() const {
        if (is_zero()) return *this;
        Rational inv = 1 / leading_coefficient();
        return *this * inv;
    }

    bool uses_variable(std::size_t var) const {
        return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.m[var] != 0; });
    }

   private:
    static const RingPtr& pick_ring(const Polynomial& a, const Polynomial& b) {
        if (!a.ring_) return b.ring_;
        if (b.ring_ && a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_))
            throw RingMismatchError("polynomials live in different rings");
        return a.ring_;
    }

    static Polynomial add(const Polynomial& a, const Polynomial& b, const Rational& sb) {
        const RingPtr& r = pick_ring(a, b);
        Polynomial out(r);
        out.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            int cmp = i == a.size() ? -1 : j == b.size() ? 1 : r->compare(a.terms_[i].m, b.terms_[j].m);
            if (cmp > 0) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (cmp < 0) {
                out.terms_.push_back({b.terms_[j].m, b.terms_[j].c * sb});
                ++j;
            } else {
                Rational c = a.terms_[i].c + b.terms_[j].c * sb;
                if (c != 0) out.terms_.push_back({a.terms_[i].m, std::move(c)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    void normalize() {
        const RingSpec& r = *ring_;
        std::sort(terms_.begin(), terms_.end(),
                  [&](const Term& x, const Term& y) { return r.compare(x.m, y.m) > 0; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().m == t.m) {
                out.back().c += t.c;
            } else {
                if (!out.empty() && out.back().c == 0) out.pop_back();
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().c == 0) out.pop_back();
        terms_ = std::move(out);
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Common (F, V) degree of all terms.
inline Bidegree bidegree(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError("bidegree of the zero polynomial");
    const RingSpec& r = *p.ring();
    Bidegree b = r.bidegree(p.terms()[0].m);
    for (const auto& t : p.terms())
        if (r.bidegree(t.m) != b) throw InhomogeneousError("polynomial is not bihomogeneous");
    return b;
}

inline bool is_bihomogeneous(const Polynomial& p) {
    if (p.is_zero()) return true;
    try {
        bidegree(p);
        return true;
    } catch (const InhomogeneousError&) {
        return false;
    }
}

/// Common degree in the quasi-homogeneous weights.
inline Rational w_degree(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError("w-degree of the zero polynomial");
    const RingSpec& r = *p.ring();
    if (!r.w_weights()) throw MissingWeightsError("ring has no quasi-homogeneous weights");
    Rational w = r.w_degree(p.terms()[0].m);
    for (const auto& t : p.terms())
        if (r.w_degree(t.m) != w) throw InhomogeneousError("polynomial is not w-homogeneous");
    return w;
}

/// Degree in the ring's positive integer grading; nullopt when inhomogeneous.
inline std::optional<std::int64_t> graded_degree(const Polynomial& p) {
    if (p.is_zero()) return std::nullopt;
    const RingSpec& r = *p.ring();
    std::int64_t d = r.degree(p.terms()[0].m);
    for (const auto& t : p.terms())
        if (r.degree(t.m) != d) return std::nullopt;
    return d;
}

inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const RingSpec& r = *p.ring();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.c;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool unit = c == 1;
        if (!unit || t.m.is_one()) os << c.get_str();
        bool need_star = !unit;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (t.m[i] == 0) continue;
            if (need_star) os << '*';
            os << r.name(i);
            if (t.m[i] > 1) os << '^' << t.m[i];
            need_star = true;
        }
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

namespace detail {

class PolyParser {
   public:
    PolyParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip();
        if (pos_ == s_.size()) throw ParseError("empty polynomial");
        bool first = true;
        while (true) {
            skip();
            if (pos_ == s_.size()) break;
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Term t = parse_term();
            if (sign < 0) t.c = -t.c;
            terms.push_back(std::move(t));
        }
        return Polynomial::from_terms(ring_, std::move(terms));
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::string digits() {
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(b, pos_ - b));
    }

    Term parse_term() {
        Term t{ring_->one(), Rational(1)};
        bool any = false;
        while (true) {
            skip();
            if (pos_ == s_.size()) break;
            char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = digits();
                if (pos_ < s_.size() && s_[pos_] == '.') fail("decimal coefficients are not exact");
                std::string den = "1";
                if (pos_ < s_.size() && s_[pos_] == '/') {
                    ++pos_;
                    den = digits();
                    if (den.empty()) fail("missing denominator");
                }
                t.c *= parse_rational(num + "/" + den);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t b = pos_;
                while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                    ++pos_;
                std::string name(s_.substr(b, pos_ - b));
                auto idx = ring_->index_of(name);
                if (!idx) fail("unknown variable '" + name + "'");
                unsigned e = 1;
                skip();
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    skip();
                    std::string d = digits();
                    if (d.empty()) fail("missing exponent");
                    e = static_cast<unsigned>(std::stoul(d));
                }
                t.m.set(*idx, t.m[*idx] + e);
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            any = true;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                continue;
            }
            if (pos_ == s_.size() || s_[pos_] == '+' || s_[pos_] == '-') break;
        }
        if (!any) fail("empty term");
        return t;
    }

    RingPtr ring_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `x1^3+x2^3`, `t*tau+1/3*x1*xi1` and similar over the ring's
/// variable vocabulary. `*` between factors is optional.
inline Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
    return detail::PolyParser(ring, text).parse();
}

/// Ring homomorphism sending variable i to images[i].
inline Polynomial substitute(const Polynomial& p, const RingPtr& target, const std::vector<Polynomial>& images) {
    const RingSpec& r = *p.ring();
    if (images.size() != r.size()) throw InvalidInputError("substitute needs one image per variable");
    Polynomial out(target);
    for (const auto& t : p.terms()) {
        Polynomial term = Polynomial::constant(target, t.c);
        for (std::size_t i = 0; i < r.size(); ++i)
            for (unsigned e = 0; e < t.m[i]; ++e) term = term * images[i];
        out += term;
    }
    return out;
}

/// Re-expresses p in a ring that shares the variable names p actually uses.
inline Polynomial map_to_ring(const Polynomial& p, const RingPtr& target) {
    if (same_ring(p.ring(), target)) return Polynomial::from_sorted(target, p.terms());
    const RingSpec& r = *p.ring();
    std::vector<std::optional<std::size_t>> idx(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) idx[i] = target->index_of(r.name(i));
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m = target->one();
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (t.m[i] == 0) continue;
            if (!idx[i]) throw RingMismatchError("variable '" + r.name(i) + "' missing from target ring");
            m.set(*idx[i], t.m[i]);
        }
        out.push_back({m, t.c});
    }
    return Polynomial::from_terms(target, std::move(out));
}

}  // namespace bigres

#endif
