#ifndef BIGRES_MODULE_HPP
#define BIGRES_MODULE_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "polynomial.hpp"

namespace bigres {

/// Free module R^r[n][m]: rank plus one (F, V) shift per basis vector.
struct FreeModuleSpec {
    std::vector<Bidegree> shifts;

    FreeModuleSpec() = default;
    explicit FreeModuleSpec(std::vector<Bidegree> s) : shifts(std::move(s)) {}
    static FreeModuleSpec zero_shifts(std::size_t rank) { return FreeModuleSpec(std::vector<Bidegree>(rank)); }

    std::size_t rank() const { return shifts.size(); }
    friend bool operator==(const FreeModuleSpec&, const FreeModuleSpec&) = default;
};

/// Element of a free module, stored componentwise.
struct ModuleElement {
    FreeModuleSpec ambient;
    std::vector<Polynomial> components;

    ModuleElement() = default;
    ModuleElement(FreeModuleSpec amb, std::vector<Polynomial> comps) : ambient(std::move(amb)), components(std::move(comps)) {
        if (components.size() != ambient.rank()) throw InvalidInputError("component count differs from module rank");
    }
    static ModuleElement zero(const RingPtr& ring, const FreeModuleSpec& amb) {
        return ModuleElement(amb, std::vector<Polynomial>(amb.rank(), Polynomial(ring)));
    }
    static ModuleElement from_polynomial(const Polynomial& p) {
        return ModuleElement(FreeModuleSpec::zero_shifts(1), {p});
    }

    std::size_t rank() const { return components.size(); }
    bool is_zero() const {
        return std::all_of(components.begin(), components.end(), [](const Polynomial& p) { return p.is_zero(); });
    }
    const RingPtr& ring() const { return components.front().ring(); }

    /// Bidegree of the element in the shifted module, i.e. bidegree of any
    /// nonzero component plus the shift of its basis vector.
    Bidegree bidegree() const {
        std::optional<Bidegree> b;
        for (std::size_t i = 0; i < rank(); ++i) {
            if (components[i].is_zero()) continue;
            Bidegree c = bigres::bidegree(components[i]) + ambient.shifts[i];
            if (b && *b != c) throw InhomogeneousError("module element is not bihomogeneous");
            b = c;
        }
        if (!b) throw ZeroPolynomialError("bidegree of the zero module element");
        return *b;
    }

    friend bool operator==(const ModuleElement& a, const ModuleElement& b) { return a.components == b.components; }
};

namespace detail {

struct MTerm {
    Monomial m;
    std::uint32_t pos;
    Rational c;
};
using MVec = std::vector<MTerm>;

}  // namespace detail

/// Term order on a free module. The plain order compares monomials first
/// and breaks ties by position (lower index greater). An induced (Schreyer)
/// order compares m*e_i by the image m*LT(g_i) in the previous module, down
/// to the base module, then by the chain of basis indices.
class ModuleOrder {
   public:
    ModuleOrder() = default;
    ModuleOrder(RingPtr ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}

    /// Order on the syzygy module of elements whose leading terms are
    /// `leading` (monomial, position) in the module ordered by `prev`.
    static ModuleOrder induced(const ModuleOrder& prev, const std::vector<std::pair<Monomial, std::uint32_t>>& leading) {
        ModuleOrder o(prev.ring_, leading.size());
        o.plain_ = false;
        o.entries_.reserve(leading.size());
        for (std::size_t i = 0; i < leading.size(); ++i) {
            const auto& [m, p] = leading[i];
            Entry e;
            if (prev.plain_) {
                e.mono = m;
                e.pos0 = p;
            } else {
                const Entry& pe = prev.entries_[p];
                e.mono = m * pe.mono;
                e.pos0 = pe.pos0;
                e.chain = pe.chain;
            }
            e.chain.push_back(p);
            o.entries_.push_back(std::move(e));
        }
        return o;
    }

    const RingPtr& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    bool plain() const { return plain_; }

    int compare(const Monomial& a, std::uint32_t pa, const Monomial& b, std::uint32_t pb) const {
        if (plain_) {
            int c = ring_->compare(a, b);
            if (c != 0) return c;
            return pa == pb ? 0 : (pa < pb ? 1 : -1);
        }
        const Entry& ea = entries_[pa];
        const Entry& eb = entries_[pb];
        int c = ring_->compare(a * ea.mono, b * eb.mono);
        if (c != 0) return c;
        if (ea.pos0 != eb.pos0) return ea.pos0 < eb.pos0 ? 1 : -1;
        for (std::size_t i = 0; i < ea.chain.size(); ++i)
            if (ea.chain[i] != eb.chain[i]) return ea.chain[i] < eb.chain[i] ? 1 : -1;
        if (pa != pb) return pa < pb ? 1 : -1;
        return 0;
    }
    int compare(const detail::MTerm& a, const detail::MTerm& b) const { return compare(a.m, a.pos, b.m, b.pos); }

   private:
    struct Entry {
        Monomial mono;
        std::uint32_t pos0 = 0;
        std::vector<std::uint32_t> chain;
    };

    RingPtr ring_;
    std::size_t rank_ = 0;
    bool plain_ = true;
    std::vector<Entry> entries_;
};

namespace detail {

inline void sort_terms(MVec& v, const ModuleOrder& order) {
    std::sort(v.begin(), v.end(), [&](const MTerm& a, const MTerm& b) { return order.compare(a, b) > 0; });
    MVec out;
    out.reserve(v.size());
    for (auto& t : v) {
        if (!out.empty() && out.back().pos == t.pos && out.back().m == t.m) {
            out.back().c += t.c;
        } else {
            if (!out.empty() && out.back().c == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().c == 0) out.pop_back();
    v = std::move(out);
}

inline MVec to_mvec(const ModuleElement& e, const ModuleOrder& order) {
    MVec v;
    for (std::uint32_t i = 0; i < e.rank(); ++i)
        for (const auto& t : e.components[i].terms()) v.push_back({t.m, i, t.c});
    std::sort(v.begin(), v.end(), [&](const MTerm& a, const MTerm& b) { return order.compare(a, b) > 0; });
    return v;
}

inline ModuleElement to_element(const MVec& v, const RingPtr& ring, const FreeModuleSpec& amb) {
    std::vector<std::vector<Term>> comps(amb.rank());
    for (const auto& t : v) comps[t.pos].push_back({t.m, t.c});
    std::vector<Polynomial> polys;
    polys.reserve(amb.rank());
    for (auto& c : comps) polys.push_back(Polynomial::from_terms(ring, std::move(c)));
    return ModuleElement(amb, std::move(polys));
}

/// h - c*m*g, merging two sorted term lists.
inline MVec axpy(const MVec& h, const Rational& c, const Monomial& m, const MVec& g, const ModuleOrder& order) {
    MVec out;
    out.reserve(h.size() + g.size());
    std::size_t i = 0, j = 0;
    MTerm gt;
    bool have = false;
    auto next_g = [&]() {
        if (j < g.size()) {
            gt.m = g[j].m * m;
            gt.pos = g[j].pos;
            gt.c = -(g[j].c * c);
            ++j;
            have = true;
        } else {
            have = false;
        }
    };
    next_g();
    while (i < h.size() || have) {
        int cmp = i == h.size() ? -1 : !have ? 1 : order.compare(h[i], gt);
        if (cmp > 0) {
            out.push_back(h[i++]);
        } else if (cmp < 0) {
            out.push_back(gt);
            next_g();
        } else {
            Rational s = h[i].c + gt.c;
            if (s != 0) out.push_back({h[i].m, h[i].pos, std::move(s)});
            ++i;
            next_g();
        }
    }
    return out;
}

inline void scale(MVec& v, const Rational& c) {
    for (auto& t : v) t.c *= c;
}

}  // namespace detail

}  // namespace bigres

#endif
