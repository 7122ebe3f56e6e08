#ifndef BIGRES_SINGULARITY_HPP
#define BIGRES_SINGULARITY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "complexes.hpp"

namespace bigres {

/// Ring Q[x1..xn] with the quasi-homogeneous weights when given.
inline RingPtr x_ring(std::size_t n, const std::optional<std::vector<Rational>>& w = std::nullopt) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    std::vector<int> zero(n, 0);
    std::optional<std::vector<std::int64_t>> grading;
    if (w) grading = weighted_grading(*w, zero);
    return make_ring(RingSpec(names, zero, zero, w, grading));
}

namespace detail {

struct VarSpec {
    std::string name;
    int f, v;
    Rational w;
};

/// Builds a ring from variable specs; the grading is L*(w + F) when the
/// x-weights are known and all ones otherwise.
inline RingPtr build_ring(const std::vector<VarSpec>& vars, bool weighted, std::optional<MonomialOrder> order = std::nullopt,
                          bool keep_w = true) {
    std::vector<std::string> names;
    std::vector<int> f, v;
    std::vector<Rational> w;
    for (const auto& s : vars) {
        names.push_back(s.name);
        f.push_back(s.f);
        v.push_back(s.v);
        w.push_back(s.w);
    }
    std::optional<std::vector<std::int64_t>> grading;
    std::optional<std::vector<Rational>> wopt;
    if (weighted) {
        grading = weighted_grading(w, f);
        if (keep_w) wopt = w;
    }
    if (order) return make_ring(RingSpec(names, f, v, wopt, grading, order));
    return make_ring(RingSpec(names, f, v, wopt, grading));
}

inline std::vector<VarSpec> x_vars(std::size_t n, const std::optional<std::vector<Rational>>& w) {
    std::vector<VarSpec> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back({"x" + std::to_string(i + 1), 0, 0, w ? (*w)[i] : Rational(0)});
    return out;
}

inline std::vector<VarSpec> xi_vars(std::size_t n, const std::optional<std::vector<Rational>>& w) {
    std::vector<VarSpec> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back({"xi" + std::to_string(i + 1), 1, 0, w ? 1 - (*w)[i] : Rational(0)});
    return out;
}

}  // namespace detail

/// R = Q[x1..xn, t, xi1..xin, tau] with (F,V) weights x:(0,0), t:(0,-1),
/// xi:(1,0), tau:(1,1) and w-weights x:w_i, t:1, xi:1-w_i, tau:0.
inline RingPtr bigr_ring(std::size_t n, const std::optional<std::vector<Rational>>& w = std::nullopt) {
    auto vars = detail::x_vars(n, w);
    vars.push_back({"t", 0, -1, 1});
    auto xi = detail::xi_vars(n, w);
    vars.insert(vars.end(), xi.begin(), xi.end());
    vars.push_back({"tau", 1, 1, 0});
    return detail::build_ring(vars, w.has_value());
}

/// Q[x1..xn, s, xi1..xin] (s omitted when with_s is false), s:(1,0), w(s)=1.
inline RingPtr dsfs_ring(std::size_t n, const std::optional<std::vector<Rational>>& w = std::nullopt, bool with_s = true) {
    auto vars = detail::x_vars(n, w);
    if (with_s) vars.push_back({"s", 1, 0, 1});
    auto xi = detail::xi_vars(n, w);
    vars.insert(vars.end(), xi.begin(), xi.end());
    return detail::build_ring(vars, w.has_value());
}

/// Germ f in Q[x1..xn] with optional weights 0 < w_i < 1, θ(f) = f.
struct SingularityInput {
    std::size_t n = 0;
    Polynomial f;
    std::optional<std::vector<Rational>> w;

    static SingularityInput make(std::size_t n, const Polynomial& f, std::optional<std::vector<Rational>> w = std::nullopt) {
        if (n < 1) throw InvalidInputError("need at least one variable");
        if (w && w->size() != n) throw InvalidInputError("expected " + std::to_string(n) + " weights");
        if (w)
            for (const auto& wi : *w)
                if (wi <= 0 || wi >= 1) throw InvalidInputError("weights must lie strictly between 0 and 1");
        SingularityInput in{n, map_to_ring(f, x_ring(n, w)), std::move(w)};
        if (in.f.is_zero()) throw ZeroPolynomialError("f must be nonzero");
        if (in.f.constant_term() != 0) throw InvalidInputError("f must vanish at the origin");
        if (in.w)
            for (const auto& t : in.f.terms())
                if (in.f.ring()->w_degree(t.m) != 1)
                    throw InhomogeneousError("f is not quasi-homogeneous of degree 1 for the given weights");
        return in;
    }
    static SingularityInput parse(std::size_t n, std::string_view text, std::optional<std::vector<Rational>> w = std::nullopt) {
        return make(n, parse_polynomial(x_ring(n), text), std::move(w));
    }
    /// Smallest n such that the text only mentions x1..xn.
    static SingularityInput parse(std::string_view text, std::optional<std::vector<Rational>> w = std::nullopt) {
        std::size_t n = w ? w->size() : 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] != 'x' || (i > 0 && std::isalnum(static_cast<unsigned char>(text[i - 1])))) continue;
            std::size_t j = i + 1, k = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) k = k * 10 + (text[j++] - '0');
            n = std::max(n, k);
        }
        if (n == 0) throw ParseError("polynomial must use variables x1, x2, ...");
        if (n > 7) throw InvalidInputError("at most 7 variables are supported");
        return parse(n, text, std::move(w));
    }

    const std::vector<Rational>& weights() const {
        if (!w) throw MissingWeightsError("quasi-homogeneous weights are required");
        return *w;
    }
};

/// Nonzero partial derivatives f'_1..f'_n, in the ring of f.
inline std::vector<Polynomial> jacobian_ideal(const SingularityInput& in) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < in.n; ++i) {
        Polynomial d = in.f.derivative(i);
        if (!d.is_zero()) out.push_back(std::move(d));
    }
    return out;
}

namespace detail {

inline Polynomial var(const RingPtr& r, const std::string& name) { return Polynomial::variable(r, name); }
inline Polynomial xi(const RingPtr& r, std::size_t i) { return var(r, "xi" + std::to_string(i + 1)); }
inline std::vector<Polynomial> derivatives_in(const SingularityInput& in, const RingPtr& r) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < in.n; ++i) out.push_back(map_to_ring(in.f.derivative(i), r));
    return out;
}

}  // namespace detail

/// χ = Σ w_i x_i ξ_i in `ring` (default: Q[x, s, ξ]).
inline Polynomial euler_symbol(const SingularityInput& in, RingPtr ring = nullptr) {
    const auto& w = in.weights();
    if (!ring) ring = dsfs_ring(in.n, w);
    Polynomial chi(ring);
    for (std::size_t i = 0; i < in.n; ++i)
        chi += w[i] * Polynomial::variable(ring, i) * detail::xi(ring, i);
    return chi;
}

/// S_ij = f'_i ξ_j - f'_j ξ_i for i < j, zero ones dropped.
inline std::vector<Polynomial> s_ij(const SingularityInput& in, const RingPtr& ring) {
    auto d = detail::derivatives_in(in, ring);
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < in.n; ++i)
        for (std::size_t j = i + 1; j < in.n; ++j) {
            Polynomial s = d[i] * detail::xi(ring, j) - d[j] * detail::xi(ring, i);
            if (!s.is_zero()) out.push_back(std::move(s));
        }
    return out;
}

/// f; tτ + χ; S_ij (i < j); f'_i τ, in R.
inline std::vector<Polynomial> bigrN_ideal(const SingularityInput& in) {
    RingPtr R = bigr_ring(in.n, in.weights());
    std::vector<Polynomial> g{map_to_ring(in.f, R)};
    g.push_back(detail::var(R, "t") * detail::var(R, "tau") + euler_symbol(in, R));
    for (auto& s : s_ij(in, R)) g.push_back(std::move(s));
    Polynomial tau = detail::var(R, "tau");
    for (auto& d : detail::derivatives_in(in, R))
        if (!d.is_zero()) g.push_back(d * tau);
    return g;
}

/// s - χ and S_ij, in Q[x, s, ξ].
inline std::vector<Polynomial> grDsfs_ideal(const SingularityInput& in) {
    RingPtr r = dsfs_ring(in.n, in.weights());
    std::vector<Polynomial> g{detail::var(r, "s") - euler_symbol(in, r)};
    for (auto& s : s_ij(in, r)) g.push_back(std::move(s));
    return g;
}

/// 2 x n matrix with rows (f'_i) and (-ξ_i), in `ring`.
inline std::vector<std::vector<Polynomial>> jacobian_matrix(const SingularityInput& in, const RingPtr& ring) {
    std::vector<std::vector<Polynomial>> A(2);
    A[0] = detail::derivatives_in(in, ring);
    for (std::size_t i = 0; i < in.n; ++i) A[1].push_back(-detail::xi(ring, i));
    return A;
}

/// Canonical reduced Gröbner basis of an ideal, as polynomials.
inline std::vector<Polynomial> reduced_basis(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> nz;
    for (const auto& g : gens)
        if (!g.is_zero()) nz.push_back(g);
    if (nz.empty()) return {};
    return buchberger(nz).polynomials();
}

/// Kernel of s -> fT, ξ_i -> f'_i T (s omitted when include_f is false),
/// by eliminating T from the graph ideal. Returns the reduced Gröbner
/// basis in Q[x, s, ξ] or Q[x, ξ].
inline std::vector<Polynomial> rees_kernel(const SingularityInput& in, bool include_f) {
    const bool weighted = in.w.has_value();
    auto vars = detail::x_vars(in.n, in.w);
    if (include_f) vars.push_back({"s", 1, 0, 1});
    auto xs = detail::xi_vars(in.n, in.w);
    vars.insert(vars.end(), xs.begin(), xs.end());
    vars.push_back({"T", 0, 0, 1});
    RingPtr graph = detail::build_ring(vars, weighted);
    RingPtr target = dsfs_ring(in.n, in.w, include_f);
    Polynomial T = detail::var(graph, "T");
    std::vector<Polynomial> gens;
    if (include_f) gens.push_back(detail::var(graph, "s") - map_to_ring(in.f, graph) * T);
    auto d = detail::derivatives_in(in, graph);
    for (std::size_t i = 0; i < in.n; ++i) gens.push_back(detail::xi(graph, i) - d[i] * T);
    return reduced_basis(eliminate(gens, {"T"}, target));
}

/// Whether the ideal is generated by its elements of F-degree <= 1, i.e.
/// of degree <= 1 in (s, ξ).
inline bool is_linear_type(const std::vector<Polynomial>& kernel_gens) {
    std::vector<Polynomial> nz;
    for (const auto& g : kernel_gens)
        if (!g.is_zero()) nz.push_back(g);
    if (nz.empty()) return true;
    const RingSpec& r = *nz.front().ring();
    std::vector<std::int64_t> fw(r.f_weights().begin(), r.f_weights().end());
    RingPtr ordered = make_ring(r.with_order(MonomialOrder::refined(fw, r.grading())));
    std::vector<Polynomial> mapped;
    for (const auto& g : nz) mapped.push_back(map_to_ring(g, ordered));
    auto gb = buchberger(mapped).polynomials();
    std::vector<Polynomial> low;
    for (const auto& g : gb) {
        int top = 0;
        for (const auto& t : g.terms()) top = std::max(top, ordered->bidegree(t.m).d);
        if (top <= 1) low.push_back(g);
    }
    if (low.empty()) return false;
    GroebnerBasis lgb = buchberger(low);
    for (const auto& g : mapped)
        if (!contains(lgb, g)) return false;
    return true;
}

namespace detail {

inline std::size_t local_dimension(const SingularityInput& in, bool with_f) {
    std::vector<std::int64_t> ones(in.n, 1);
    RingSpec base = *x_ring(in.n);
    RingPtr local = make_ring(base.with_order(MonomialOrder::local_order(ones)));
    std::vector<Polynomial> gens;
    if (with_f) gens.push_back(map_to_ring(in.f, local));
    for (const auto& d : jacobian_ideal(in)) gens.push_back(map_to_ring(d, local));
    if (gens.empty()) throw InfiniteDimensionalError("all partial derivatives vanish");
    return quotient_staircase(buchberger(gens, Mode::Local)).size();
}

}  // namespace detail

/// dim Q{x}/J(f), computed with a local standard basis.
inline std::size_t milnor_number(const SingularityInput& in) { return detail::local_dimension(in, false); }

/// dim Q{x}/(f, J(f)).
inline std::size_t tjurina_number(const SingularityInput& in) { return detail::local_dimension(in, true); }

struct ClassificationVerdict {
    std::size_t milnor = 0;
    std::size_t tjurina = 0;
    bool quasi_homogeneous = false;
    std::string method;
};

inline ClassificationVerdict classify_quasi_homogeneous(const SingularityInput& in) {
    ClassificationVerdict v;
    v.milnor = milnor_number(in);
    v.tjurina = tjurina_number(in);
    v.quasi_homogeneous = v.milnor == v.tjurina;
    v.method = "local standard bases (ds order); quasi-homogeneous iff mu == tau";
    return v;
}

/// Minimal bigraded resolution of R / (bigrN ideal).
inline FreeComplex resolution_of_Nf(const SingularityInput& in, std::optional<std::size_t> max_length = std::nullopt) {
    milnor_number(in);  // refuses non-isolated input
    auto gens = bigrN_ideal(in);
    RingPtr R = gens.front().ring();
    return minimalize(resolve(ideal_presentation(R, gens), max_length.value_or(R->size() + 1)));
}

inline BettiTable betti_of_Nf(const SingularityInput& in, std::optional<std::size_t> max_length = std::nullopt) {
    return betti_table(resolution_of_Nf(in, max_length));
}

/// K(0) on the matrix (f'_i; -ξ_i): resolution of ring/(S_ij).
inline FreeComplex eagon_northcott(const SingularityInput& in, const RingPtr& ring, Bidegree base = {}) {
    return generalized_koszul({jacobian_matrix(in, ring), 0, 0, base});
}

/// Cone of s - χ acting on K(0) over Q[x, s, ξ]: resolves gr^F(D[s]f^s).
inline FreeComplex dsfs_complex(const SingularityInput& in) {
    RingPtr r = dsfs_ring(in.n, in.weights());
    Polynomial g = detail::var(r, "s") - euler_symbol(in, r);
    FreeComplex target = eagon_northcott(in, r);
    FreeComplex source = eagon_northcott(in, r, bidegree(g));
    MatrixMap f0(r, source.base, target.base);
    f0.at(0, 0) = g;
    return mapping_cone(lift_chain_map(f0, source, target));
}

/// Cone of multiplication by f on the resolution of gr^F(D[s]f^s):
/// resolves gr^F(D[s]f^s / D[s]f^{s+1}).
inline FreeComplex M_complex(const SingularityInput& in) {
    FreeComplex target = minimalize(dsfs_complex(in));
    FreeComplex source = shift_complex(target, bidegree(map_to_ring(in.f, target.ring)));
    MatrixMap f0(target.ring, source.base, target.base);
    f0.at(0, 0) = map_to_ring(in.f, target.ring);
    return mapping_cone(lift_chain_map(f0, source, target));
}

/// x1, τ, ξ2..ξn in R: the symbols cutting out the smooth germ f = x1.
inline std::vector<Polynomial> smooth_symbols(std::size_t n) {
    RingPtr R = bigr_ring(n);
    std::vector<Polynomial> g{Polynomial::variable(R, 0), detail::var(R, "tau")};
    for (std::size_t i = 1; i < n; ++i) g.push_back(detail::xi(R, i));
    return g;
}

}  // namespace bigres

#endif
