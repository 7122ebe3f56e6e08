#ifndef BIGRES_BETTIMATH_HPP
#define BIGRES_BETTIMATH_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <vector>

#include "resolution.hpp"

namespace bigres {

/// Σ β_i T^i; coefficients[i] = β_i.
struct BettiPolynomial {
    std::vector<std::int64_t> coefficients;

    BettiPolynomial() = default;
    BettiPolynomial(std::initializer_list<std::int64_t> c) : coefficients(c) {}
    explicit BettiPolynomial(std::vector<std::int64_t> c) : coefficients(std::move(c)) { trim(); }
    static BettiPolynomial from_table(const BettiTable& t) {
        std::vector<std::int64_t> c;
        for (auto b : t.betti()) c.push_back(static_cast<std::int64_t>(b));
        return BettiPolynomial(std::move(c));
    }

    std::size_t size() const { return coefficients.size(); }
    std::int64_t operator[](std::size_t i) const { return i < coefficients.size() ? coefficients[i] : 0; }
    /// Value at T = x.
    std::int64_t evaluate(std::int64_t x) const {
        std::int64_t r = 0;
        for (std::size_t i = coefficients.size(); i-- > 0;) r = r * x + coefficients[i];
        return r;
    }
    void trim() {
        while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
    }

    friend bool operator==(const BettiPolynomial&, const BettiPolynomial&) = default;
    friend std::ostream& operator<<(std::ostream& os, const BettiPolynomial& b) {
        os << '[';
        for (std::size_t i = 0; i < b.coefficients.size(); ++i) os << (i ? "," : "") << b.coefficients[i];
        return os << ']';
    }
};

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// (i-2) C(n+2, i+1) + 2 C(n+1, i+1), the tail shared by N and M.
inline std::int64_t cone_tail(std::int64_t n, std::int64_t i) {
    return (i - 2) * binomial(n + 2, i + 1) + 2 * binomial(n + 1, i + 1);
}

/// β_2 of N as printed: 1 + n + 2 C(n+1, n-2).
inline std::int64_t thm3_beta2_printed(std::int64_t n) { return 1 + n + 2 * binomial(n + 1, n - 2); }

/// β_2 of N from the general formula at i = 2: 2 C(n+1, 3).
inline std::int64_t thm3_beta2_generic(std::int64_t n) { return cone_tail(n, 2); }

/// The printed β_2 exceeds the i = 2 value of the general formula by
/// exactly 1 + n; checks that and the symmetry C(n+1, n-2) = C(n+1, 3).
inline bool thm3_beta2_consistent(std::int64_t n) {
    return binomial(n + 1, n - 2) == binomial(n + 1, 3) && thm3_beta2_printed(n) == 1 + n + thm3_beta2_generic(n);
}

/// Betti numbers of N: 1, 2 + n(n+1)/2, 1 + n + 2 C(n+1, n-2), then
/// (i-2) C(n+2, i+1) + 2 C(n+1, i+1) up to i = n+1.
inline BettiPolynomial thm3_closed_form(std::int64_t n) {
    if (n < 2) throw InvalidInputError("closed form needs n >= 2");
    std::vector<std::int64_t> c{1, 2 + n * (n + 1) / 2, thm3_beta2_printed(n)};
    for (std::int64_t i = 3; i <= n + 1; ++i) c.push_back(cone_tail(n, i));
    return BettiPolynomial(std::move(c));
}

/// Betti numbers of gr^F(D[s]f^s): 1, C(n,2) + 1, then i C(n, i+1) + (i-1) C(n, i).
inline BettiPolynomial dsfs_closed_form(std::int64_t n) {
    if (n < 1) throw InvalidInputError("closed form needs n >= 1");
    std::vector<std::int64_t> c{1, binomial(n, 2) + 1};
    for (std::int64_t i = 2; i <= n; ++i) c.push_back(i * binomial(n, i + 1) + (i - 1) * binomial(n, i));
    return BettiPolynomial(std::move(c));
}

/// Betti numbers of M: 1, 2 + C(n,2), 2 C(n+1,3) + 1, then the cone tail.
inline BettiPolynomial M_closed_form(std::int64_t n) {
    if (n < 2) throw InvalidInputError("closed form needs n >= 2");
    std::vector<std::int64_t> c{1, 2 + binomial(n, 2), 2 * binomial(n + 1, 3) + 1};
    for (std::int64_t i = 3; i <= n + 1; ++i) c.push_back(cone_tail(n, i));
    return BettiPolynomial(std::move(c));
}

/// (1+T)^{n+p}.
inline BettiPolynomial smooth_closed_form(std::int64_t n, std::int64_t p) {
    if (n < 1 || p < 1) throw InvalidInputError("smooth closed form needs n, p >= 1");
    std::vector<std::int64_t> c;
    for (std::int64_t i = 0; i <= n + p; ++i) c.push_back(binomial(n + p, i));
    return BettiPolynomial(std::move(c));
}

/// 1, C(n,2), 2 C(n,3), ..., (n-1) C(n,n).
inline BettiPolynomial en_closed_form(std::int64_t n) {
    if (n < 2) throw InvalidInputError("closed form needs n >= 2");
    std::vector<std::int64_t> c{1};
    for (std::int64_t k = 2; k <= n; ++k) c.push_back((k - 1) * binomial(n, k));
    return BettiPolynomial(std::move(c));
}

inline BettiPolynomial multiply_one_plus_T(const BettiPolynomial& b, std::size_t power) {
    std::vector<std::int64_t> c = b.coefficients;
    for (std::size_t k = 0; k < power; ++k) {
        c.push_back(0);
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] += c[i - 1];
    }
    return BettiPolynomial(std::move(c));
}

/// β_f(T) / (1+T)^{n+p-c0}; throws NotDivisibleError on a remainder.
inline BettiPolynomial space_invariant(const BettiPolynomial& b, std::int64_t n, std::int64_t p, std::int64_t c0) {
    if (n + p < c0) throw InvalidInputError("need n + p >= c0");
    std::vector<std::int64_t> c = b.coefficients;
    for (std::int64_t k = 0; k < n + p - c0; ++k) {
        if (c.empty()) break;
        std::vector<std::int64_t> q(c.size() - 1);
        std::int64_t carry = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = c[i] - carry;
            carry = q[i];
        }
        if (c.back() != carry) throw NotDivisibleError("Betti polynomial is not divisible by (1+T)");
        c = std::move(q);
    }
    return BettiPolynomial(std::move(c));
}

enum class ShiftExtension { RedundantGenerator, SmoothVariable };

/// Shift table after adding a redundant generator, i-th shifts
/// n^(i) ++ n^(i-1), or a smooth variable,
/// n^(i) ++ n^(i-1) ++ (n^(i-1) + 1) ++ (n^(i-2) + 1) with 1 = (1,1).
inline BettiTable shift_extension_rule(const BettiTable& t, ShiftExtension kind) {
    if (t.shifts.empty()) return t;
    const std::size_t len = t.shifts.size() + (kind == ShiftExtension::RedundantGenerator ? 1 : 2);
    auto level = [&](std::ptrdiff_t i) -> std::vector<Bidegree> {
        if (i < 0 || static_cast<std::size_t>(i) >= t.shifts.size()) return {};
        return t.shifts[static_cast<std::size_t>(i)];
    };
    BettiTable out;
    for (std::size_t i = 0; i < len; ++i) {
        auto ii = static_cast<std::ptrdiff_t>(i);
        std::vector<Bidegree> s = level(ii);
        auto prev = level(ii - 1);
        s.insert(s.end(), prev.begin(), prev.end());
        if (kind == ShiftExtension::SmoothVariable) {
            for (auto b : prev) s.push_back(b + Bidegree{1, 1});
            for (auto b : level(ii - 2)) s.push_back(b + Bidegree{1, 1});
        }
        std::sort(s.begin(), s.end());
        out.shifts.push_back(std::move(s));
    }
    while (out.shifts.size() > 1 && out.shifts.back().empty()) out.shifts.pop_back();
    return out;
}

}  // namespace bigres

#endif
