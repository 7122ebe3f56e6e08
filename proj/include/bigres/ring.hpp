#ifndef BIGRES_RING_HPP
#define BIGRES_RING_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace bigres {

/// (F-degree, V-degree) pair. The V component may be negative.
struct Bidegree {
    int d = 0;
    int k = 0;

    friend constexpr Bidegree operator+(Bidegree a, Bidegree b) { return {a.d + b.d, a.k + b.k}; }
    friend constexpr Bidegree operator-(Bidegree a, Bidegree b) { return {a.d - b.d, a.k - b.k}; }
    friend constexpr bool operator==(Bidegree, Bidegree) = default;
    friend constexpr auto operator<=>(Bidegree, Bidegree) = default;
    friend std::ostream& operator<<(std::ostream& os, Bidegree b) {
        return os << '(' << b.d << ',' << b.k << ')';
    }
};

inline constexpr std::size_t kMaxVars = 16;

/// Dense exponent vector. Unused slots stay zero so equality and hashing can
/// look at the whole array.
class Monomial {
   public:
    using Exponent = std::uint16_t;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
        if (nvars > kMaxVars) throw std::length_error("too many variables for Monomial");
    }
    Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
        std::size_t i = 0;
        for (unsigned e : exps) set(i++, e);
    }

    std::size_t size() const { return n_; }
    Exponent operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, unsigned value) {
        if (value > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
        e_[i] = static_cast<Exponent>(value);
    }

    bool is_one() const {
        return std::all_of(e_.begin(), e_.begin() + n_, [](Exponent x) { return x == 0; });
    }
    unsigned total_degree() const {
        unsigned s = 0;
        for (std::size_t i = 0; i < n_; ++i) s += e_[i];
        return s;
    }
    std::int64_t weighted_degree(const std::vector<std::int64_t>& w) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < n_; ++i) s += w[i] * e_[i];
        return s;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }
    bool coprime(const Monomial& other) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (e_[i] != 0 && other.e_[i] != 0) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) {
            unsigned s = unsigned(a.e_[i]) + b.e_[i];
            if (s > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
            r.e_[i] = static_cast<Exponent>(s);
        }
        return r;
    }
    /// Exact quotient; caller guarantees b divides a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = static_cast<Exponent>(a.e_[i] - b.e_[i]);
        return r;
    }
    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        return r;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_ && a.n_ == b.n_; }

    std::size_t hash() const {
        std::size_t h = n_;
        for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
        return h;
    }

   private:
    std::array<Exponent, kMaxVars> e_{};
    std::uint8_t n_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// A monomial order given by a list of integer weight rows compared in turn
/// (larger weighted degree wins), then reverse lexicographic tie-breaking.
/// When `local` is set the first row is compared in reverse, which makes
/// 1 greater than every variable (negative degree reverse lexicographic).
struct MonomialOrder {
    enum class Kind { Graded, Elimination, Local };

    Kind kind = Kind::Graded;
    std::vector<std::vector<std::int64_t>> rows;
    bool local = false;

    static MonomialOrder graded(std::vector<std::int64_t> grading) {
        return {Kind::Graded, {std::move(grading)}, false};
    }
    static MonomialOrder local_order(std::vector<std::int64_t> grading) {
        return {Kind::Local, {std::move(grading)}, true};
    }
    /// `block` marks the variables to eliminate; they dominate everything.
    static MonomialOrder elimination(const std::vector<bool>& block, std::vector<std::int64_t> grading) {
        std::vector<std::int64_t> mask(block.size());
        for (std::size_t i = 0; i < block.size(); ++i) mask[i] = block[i] ? 1 : 0;
        return {Kind::Elimination, {std::move(mask), std::move(grading)}, false};
    }
    /// Refines a grading by a coarser nonnegative weight compared first.
    static MonomialOrder refined(std::vector<std::int64_t> first, std::vector<std::int64_t> grading) {
        return {Kind::Graded, {std::move(first), std::move(grading)}, false};
    }

    /// Returns <0, 0, >0 as a is smaller, equal, greater than b.
    int compare(const Monomial& a, const Monomial& b) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::int64_t da = a.weighted_degree(rows[r]);
            std::int64_t db = b.weighted_degree(rows[r]);
            if (da != db) {
                bool greater = da > db;
                if (local && r == 0) greater = !greater;
                return greater ? 1 : -1;
            }
        }
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Variables with their F-, V- and optional quasi-homogeneous weights plus
/// the monomial order used for canonical term ordering.
class RingSpec {
   public:
    RingSpec(std::vector<std::string> names, std::vector<int> f_weights, std::vector<int> v_weights,
             std::optional<std::vector<Rational>> w_weights = std::nullopt,
             std::optional<std::vector<std::int64_t>> grading = std::nullopt,
             std::optional<MonomialOrder> order = std::nullopt)
        : names_(std::move(names)),
          f_(std::move(f_weights)),
          v_(std::move(v_weights)),
          w_(std::move(w_weights)) {
        const std::size_t n = names_.size();
        if (n > kMaxVars) throw InvalidInputError("at most " + std::to_string(kMaxVars) + " variables supported");
        if (f_.size() != n || v_.size() != n || (w_ && w_->size() != n))
            throw InvalidInputError("weight vectors must match the variable list");
        std::set<std::string> seen(names_.begin(), names_.end());
        if (seen.size() != n) throw InvalidInputError("variable names must be distinct");
        grading_ = grading ? *grading : std::vector<std::int64_t>(n, 1);
        if (grading_.size() != n) throw InvalidInputError("grading must match the variable list");
        for (auto g : grading_)
            if (g <= 0) throw InvalidInputError("grading weights must be positive");
        order_ = order ? *order : MonomialOrder::graded(grading_);
    }

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }
    const std::vector<int>& f_weights() const { return f_; }
    const std::vector<int>& v_weights() const { return v_; }
    const std::optional<std::vector<Rational>>& w_weights() const { return w_; }
    /// Positive integer grading; every order of the ring is compatible with it.
    const std::vector<std::int64_t>& grading() const { return grading_; }
    const MonomialOrder& order() const { return order_; }
    bool is_local() const { return order_.local; }

    int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

    Bidegree bidegree(const Monomial& m) const {
        Bidegree b;
        for (std::size_t i = 0; i < size(); ++i) {
            b.d += f_[i] * m[i];
            b.k += v_[i] * m[i];
        }
        return b;
    }
    Rational w_degree(const Monomial& m) const {
        if (!w_) throw MissingWeightsError("ring has no quasi-homogeneous weights");
        Rational s = 0;
        for (std::size_t i = 0; i < size(); ++i) s += (*w_)[i] * m[i];
        return s;
    }
    std::int64_t degree(const Monomial& m) const { return m.weighted_degree(grading_); }

    Monomial one() const { return Monomial(size()); }
    Monomial variable(std::size_t i) const {
        Monomial m(size());
        m.set(i, 1);
        return m;
    }

    /// Same variables and weights, different order.
    RingSpec with_order(MonomialOrder order) const {
        RingSpec r = *this;
        r.order_ = std::move(order);
        return r;
    }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

   private:
    std::vector<std::string> names_;
    std::vector<int> f_;
    std::vector<int> v_;
    std::optional<std::vector<Rational>> w_;
    std::vector<std::int64_t> grading_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline RingPtr make_ring(RingSpec spec) { return std::make_shared<const RingSpec>(std::move(spec)); }

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

/// Positive integer grading L*(w + F) where L clears the denominators of w.
/// Every generator used by the singularity builders is homogeneous for it.
inline std::vector<std::int64_t> weighted_grading(const std::vector<Rational>& w, const std::vector<int>& f) {
    Integer L = 1;
    for (const auto& q : w) L = lcm(L, q.get_den());
    std::vector<std::int64_t> g(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        Rational v = (w[i] + f[i]) * L;
        if (v.get_den() != 1 || v <= 0)
            throw InvalidInputError("weights do not define a positive grading");
        g[i] = v.get_num().get_si();
    }
    return g;
}

}  // namespace bigres

template <>
struct std::hash<bigres::Monomial> {
    std::size_t operator()(const bigres::Monomial& m) const { return m.hash(); }
};

#endif
