#ifndef BIGRES_COMPLEXES_HPP
#define BIGRES_COMPLEXES_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "resolution.hpp"

namespace bigres {

namespace detail {

/// Size-p subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t p) {
    std::vector<std::vector<std::size_t>> out;
    if (p > n) return out;
    std::vector<std::size_t> cur(p);
    for (std::size_t i = 0; i < p; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        std::size_t i = p;
        while (i > 0 && cur[i - 1] == n - p + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t k = i; k < p; ++k) cur[k] = cur[k - 1] + 1;
    }
    return out;
}

/// Contraction with a row a: e_I -> sum_k (-1)^k a_{I_k} e_{I minus I_k}.
inline std::vector<std::pair<std::vector<std::size_t>, Polynomial>> contract(const std::vector<std::size_t>& I,
                                                                               const std::vector<Polynomial>& a) {
    std::vector<std::pair<std::vector<std::size_t>, Polynomial>> out;
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (a[I[k]].is_zero()) continue;
        std::vector<std::size_t> J = I;
        J.erase(J.begin() + static_cast<std::ptrdiff_t>(k));
        out.emplace_back(std::move(J), k % 2 == 0 ? a[I[k]] : -a[I[k]]);
    }
    return out;
}

inline FreeModuleSpec concat(const FreeModuleSpec& a, const FreeModuleSpec& b) {
    FreeModuleSpec r = a;
    r.shifts.insert(r.shifts.end(), b.shifts.begin(), b.shifts.end());
    return r;
}

}  // namespace detail

/// Koszul complex on `elements`: term p is the exterior power Λ^p with
/// basis e_I, I in lexicographic order, and e_I has shift base + Σ bideg a_i.
inline FreeComplex koszul(const std::vector<Polynomial>& elements, Bidegree base = {}) {
    if (elements.empty()) throw InvalidInputError("Koszul complex needs at least one element");
    const RingPtr ring = elements.front().ring();
    std::vector<Bidegree> deg;
    for (const auto& a : elements) {
        if (a.is_zero()) throw InvalidInputError("Koszul elements must be nonzero");
        if (!is_bihomogeneous(a)) throw InhomogeneousError("Koszul element " + to_string(a) + " is not bihomogeneous");
        deg.push_back(bidegree(a));
    }
    const std::size_t r = elements.size();
    auto spec = [&](const std::vector<std::vector<std::size_t>>& basis) {
        std::vector<Bidegree> s;
        for (const auto& I : basis) {
            Bidegree b = base;
            for (auto i : I) b = b + deg[i];
            s.push_back(b);
        }
        return FreeModuleSpec(std::move(s));
    };
    FreeComplex c{ring, FreeModuleSpec({base}), {}};
    for (std::size_t p = 1; p <= r; ++p) {
        auto src = detail::subsets(r, p);
        auto tgt = detail::subsets(r, p - 1);
        std::map<std::vector<std::size_t>, std::size_t> row;
        for (std::size_t i = 0; i < tgt.size(); ++i) row[tgt[i]] = i;
        MatrixMap d(ring, spec(src), spec(tgt));
        for (std::size_t j = 0; j < src.size(); ++j)
            for (auto& [J, coef] : detail::contract(src[j], elements)) d.at(row.at(J), j) += coef;
        c.maps.push_back(std::move(d));
    }
    return c;
}

/// Input of the generalized Koszul complex K(A, t) on a 2 x n matrix,
/// truncated to K_{n-1} -> ... -> K_q.
struct GenKoszulSpec {
    std::vector<std::vector<Polynomial>> A;
    int t = 0;
    int q = 0;
    Bidegree base{};
};

namespace detail {

struct GenKoszulTerm {
    std::size_t wedge;  // exterior power
    int sym;            // symmetric power in X1, X2
};

inline GenKoszulTerm gen_koszul_term(int h, int t) {
    if (h > t) return {static_cast<std::size_t>(h + 1), h - t - 1};
    return {static_cast<std::size_t>(h), t - h};
}

}  // namespace detail

/// K_h = Λ^{h+1} ⊗ S_{h-t-1} for h > t and Λ^h ⊗ S_{t-h} for h <= t, with
/// basis ω ⊗ X1^a X2^{j-a}, ω lexicographic and a decreasing. The
/// differential is Σ δ_r ⊗ X_r for h <= t, Σ δ_r ⊗ X_r^{-1} for h > t+1 and
/// δ_1∘δ_2 at h = t+1, where δ_r contracts with row r of A; with the rows
/// (f'_i) and (-ξ_i) this gives d(e_i ∧ e_j) = f'_i ξ_j - f'_j ξ_i.
inline FreeComplex generalized_koszul(const GenKoszulSpec& spec) {
    if (spec.A.size() != 2) throw InvalidInputError("generalized Koszul complex needs a 2-row matrix");
    const std::size_t n = spec.A[0].size();
    if (n < 2 || spec.A[1].size() != n) throw InvalidInputError("matrix rows must have the same length n >= 2");
    const int t = spec.t;
    const int top = static_cast<int>(n) - 1;
    bool allowed = t >= -1 && (t <= static_cast<int>(n) - 2 || (n == 2 && t == 1));
    if (!allowed) throw HypothesisError("K(A,t) requires -1 <= t <= n-2 (t = 1 also accepted for n = 2)");
    if (spec.q < 0 || spec.q > top) throw HypothesisError("truncation index must satisfy 0 <= q <= n-1");

    const RingPtr ring = spec.A[0][0].ring();
    std::vector<Bidegree> E(n);
    std::optional<Bidegree> D;
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial& a = spec.A[0][i];
        const Polynomial& b = spec.A[1][i];
        if (a.is_zero() || b.is_zero()) throw InvalidInputError("matrix entries must be nonzero");
        if (!is_bihomogeneous(a) || !is_bihomogeneous(b)) throw InhomogeneousError("matrix entries must be bihomogeneous");
        E[i] = bidegree(a);
        Bidegree di = bidegree(b) - E[i];
        if (D && *D != di) throw InhomogeneousError("row degree difference must be constant across columns");
        D = di;
    }
    const Bidegree dX2 = Bidegree{} - *D;  // X1 has degree 0

    struct Basis {
        std::vector<std::pair<std::vector<std::size_t>, int>> elems;  // (ω, exponent of X1)
        std::map<std::pair<std::vector<std::size_t>, int>, std::size_t> index;
        FreeModuleSpec spec;
    };
    auto basis = [&](int h) {
        Basis b;
        auto [p, j] = detail::gen_koszul_term(h, t);
        for (const auto& I : detail::subsets(n, p))
            for (int a = j; a >= 0; --a) {
                Bidegree s = spec.base;
                for (auto i : I) s = s + E[i];
                Bidegree sym{(j - a) * dX2.d, (j - a) * dX2.k};
                if (h <= t) s = s + sym;
                else s = s - dX2 - sym;
                b.index[{I, a}] = b.elems.size();
                b.elems.emplace_back(I, a);
                b.spec.shifts.push_back(s);
            }
        return b;
    };

    std::vector<Basis> bases;
    for (int h = spec.q; h <= top; ++h) bases.push_back(basis(h));
    FreeComplex c{ring, bases[0].spec, {}};
    for (int h = spec.q + 1; h <= top; ++h) {
        const Basis& src = bases[static_cast<std::size_t>(h - spec.q)];
        const Basis& tgt = bases[static_cast<std::size_t>(h - spec.q - 1)];
        MatrixMap d(ring, src.spec, tgt.spec);
        const int j_src = detail::gen_koszul_term(h, t).sym;
        for (std::size_t col = 0; col < src.elems.size(); ++col) {
            const auto& [I, a] = src.elems[col];
            const int b = j_src - a;  // exponent of X2
            if (h == t + 1) {
                for (auto& [J, c2] : detail::contract(I, spec.A[1]))
                    for (auto& [K, c1] : detail::contract(J, spec.A[0])) d.at(tgt.index.at({K, 0}), col) += c1 * c2;
                continue;
            }
            for (int r = 0; r < 2; ++r) {
                int na = a, nb = b;
                if (h <= t) {
                    (r == 0 ? na : nb) += 1;
                } else {
                    int& e = r == 0 ? na : nb;
                    if (e == 0) continue;
                    e -= 1;
                }
                for (auto& [J, coef] : detail::contract(I, spec.A[r])) d.at(tgt.index.at({J, na}), col) += coef;
            }
        }
        c.maps.push_back(std::move(d));
    }
    return c;
}

/// Levels α_i : source_i -> target_i of a morphism of complexes.
struct ChainMap {
    FreeComplex source;
    FreeComplex target;
    std::vector<MatrixMap> levels;
};

/// Exact check of d'_i α_i = α_{i-1} d_i at every level.
inline bool is_chain_map(const ChainMap& a) {
    if (a.levels.size() != a.source.length() + 1) return false;
    for (std::size_t i = 1; i < a.levels.size(); ++i) {
        MatrixMap rhs = compose(a.levels[i - 1], a.source.d(i));
        if (i <= a.target.length()) {
            if (!(compose(a.target.d(i), a.levels[i]).entries == rhs.entries)) return false;
        } else if (!rhs.is_zero()) {
            return false;
        }
    }
    return true;
}

namespace detail {

/// Solves d u = v for u using a Gröbner basis of the columns of d with
/// cofactor tracking.
class Lifter {
   public:
    explicit Lifter(const MatrixMap& d) : ring_(d.ring), source_(d.source), order_(d.ring, d.rows()), index_(d.rows()) {
        std::vector<MVec> gens;
        for (std::size_t j = 0; j < d.cols(); ++j) gens.push_back(to_mvec(d.column(j), order_));
        raw_ = buchberger_raw(gens, order_, true);
        rep_order_ = ModuleOrder(ring_, d.cols());
        for (std::uint32_t k = 0; k < raw_.elems.size(); ++k) index_.add(raw_.elems[k], k);
    }

    std::optional<ModuleElement> solve(const ModuleElement& v) const {
        MVec acc;
        MVec rest = reduce(to_mvec(v, order_), raw_.elems, index_, order_, true,
                           [&](std::uint32_t k, const Rational& c, const Monomial& m) {
                               acc = axpy(acc, -c, m, raw_.reps[k], rep_order_);
                           });
        if (!rest.empty()) return std::nullopt;
        return to_element(acc, ring_, source_);
    }

   private:
    RingPtr ring_;
    FreeModuleSpec source_;
    ModuleOrder order_;
    ModuleOrder rep_order_;
    DivisorIndex index_;
    RawBasis raw_;
};

}  // namespace detail

/// Extends f0 : source_0 -> target_0 to a chain map by lifting each
/// α_{i-1} d_i through d'_i. Throws LiftError when some composite is not
/// in the image of the target differential.
inline ChainMap lift_chain_map(const MatrixMap& f0, const FreeComplex& source, const FreeComplex& target) {
    if (f0.cols() != source.base.rank() || f0.rows() != target.base.rank())
        throw InvalidInputError("level-0 map does not match the complexes");
    ChainMap a{source, target, {f0}};
    const RingPtr& ring = f0.ring ? f0.ring : source.ring;
    for (std::size_t i = 1; i <= source.length(); ++i) {
        MatrixMap comp = compose(a.levels[i - 1], source.d(i));
        MatrixMap level(ring, source.module(i), target.module(i));
        if (i > target.length()) {
            if (!comp.is_zero())
                throw LiftError("level " + std::to_string(i) + ": target complex has no differential to lift through");
            a.levels.push_back(std::move(level));
            continue;
        }
        detail::Lifter lifter(target.d(i));
        for (std::size_t j = 0; j < comp.cols(); ++j) {
            ModuleElement v = comp.column(j);
            if (v.is_zero()) continue;
            auto u = lifter.solve(v);
            if (!u) throw LiftError("level " + std::to_string(i) + ", column " + std::to_string(j) +
                                    ": composite is not in the image of the target differential");
            level.set_column(j, *u);
        }
        a.levels.push_back(std::move(level));
    }
    return a;
}

/// Cone_i = target_i ⊕ source_{i-1} with differential [[d', α], [0, -d]].
inline FreeComplex mapping_cone(const ChainMap& a) {
    const FreeComplex& C = a.source;
    const FreeComplex& D = a.target;
    const RingPtr& ring = D.ring ? D.ring : C.ring;
    const std::size_t len = std::max(D.length(), C.length() + 1);
    FreeComplex cone{ring, D.base, {}};
    auto cmod = [&](std::size_t k) { return C.module(k); };
    for (std::size_t i = 1; i <= len; ++i) {
        FreeModuleSpec src = detail::concat(D.module(i), cmod(i - 1));
        FreeModuleSpec tgt = i >= 2 ? detail::concat(D.module(i - 1), cmod(i - 2)) : D.module(0);
        MatrixMap m(ring, src, tgt);
        const std::size_t rD = D.module(i).rank();
        const std::size_t rDt = D.module(i - 1).rank();
        if (i <= D.length())
            for (std::size_t r = 0; r < rDt; ++r)
                for (std::size_t c = 0; c < rD; ++c) m.at(r, c) = D.d(i).at(r, c);
        if (i - 1 < a.levels.size()) {
            const MatrixMap& al = a.levels[i - 1];
            for (std::size_t r = 0; r < al.rows(); ++r)
                for (std::size_t c = 0; c < al.cols(); ++c) m.at(r, rD + c) = al.at(r, c);
        }
        if (i >= 2 && i - 1 <= C.length()) {
            const MatrixMap& dc = C.d(i - 1);
            for (std::size_t r = 0; r < dc.rows(); ++r)
                for (std::size_t c = 0; c < dc.cols(); ++c) m.at(rDt + r, rD + c) = -dc.at(r, c);
        }
        cone.maps.push_back(std::move(m));
    }
    while (!cone.maps.empty() && cone.maps.back().cols() == 0) cone.maps.pop_back();
    return cone;
}

}  // namespace bigres

#endif
