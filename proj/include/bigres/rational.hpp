#ifndef BIGRES_RATIONAL_HPP
#define BIGRES_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace bigres {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "-a" or "a/b" exactly. Decimal points are rejected so that
/// weights such as 1/3 stay exact.
inline Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational");
    std::size_t slash = s.find('/');
    auto valid_int = [](std::string_view t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("not an exact rational: '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer nz(num), dz(den);
    if (dz == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(nz, dz);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace bigres

#endif
