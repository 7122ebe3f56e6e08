#ifndef BIGRES_GROEBNER_HPP
#define BIGRES_GROEBNER_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "module.hpp"

namespace bigres {

/// Global: Buchberger over a well-order. Local: Mora's tangent cone
/// algorithm over a local order (ideals only).
enum class Mode { Global, Local };

struct GroebnerBasis {
    RingPtr ring;
    FreeModuleSpec ambient;
    ModuleOrder order;
    Mode mode = Mode::Global;
    std::vector<ModuleElement> elements;
    std::vector<detail::MVec> vecs;  // same elements, sorted term lists

    std::size_t size() const { return elements.size(); }
    /// Convenience accessor for ideals.
    std::vector<Polynomial> polynomials() const {
        std::vector<Polynomial> out;
        for (const auto& e : elements) out.push_back(e.components.at(0));
        return out;
    }
};

namespace detail {

inline std::int64_t ecart(const MVec& v, const RingSpec& ring) {
    std::int64_t lead = ring.degree(v.front().m);
    std::int64_t top = lead;
    for (const auto& t : v) top = std::max(top, ring.degree(t.m));
    return top - lead;
}

/// Index of basis elements by leading position, for divisor lookup.
class DivisorIndex {
   public:
    DivisorIndex(std::size_t rank) : by_pos_(rank) {}
    void add(const MVec& v, std::uint32_t index) { by_pos_[v.front().pos].push_back({v.front().m, index}); }
    /// First element (lowest index) whose leading term divides (m, pos).
    std::optional<std::uint32_t> find(const Monomial& m, std::uint32_t pos) const {
        for (const auto& [lm, idx] : by_pos_[pos])
            if (lm.divides(m)) return idx;
        return std::nullopt;
    }
    template <class F>
    void for_each_divisor(const Monomial& m, std::uint32_t pos, F&& f) const {
        for (const auto& [lm, idx] : by_pos_[pos])
            if (lm.divides(m)) f(idx);
    }

   private:
    std::vector<std::vector<std::pair<Monomial, std::uint32_t>>> by_pos_;
};

/// Reduction step callback: h <- h - c*m*G[index].
using StepFn = std::function<void(std::uint32_t index, const Rational& c, const Monomial& m)>;

/// Division by G. With `full` every term is reduced, otherwise only the
/// leading term is. Quotients are reported through `step`.
inline MVec reduce(MVec h, const std::vector<MVec>& G, const DivisorIndex& index, const ModuleOrder& order, bool full,
                   const StepFn& step = {}) {
    MVec rest;
    while (!h.empty()) {
        const MTerm& t = h.front();
        auto k = index.find(t.m, t.pos);
        if (!k) {
            if (!full) break;
            rest.push_back(std::move(h.front()));
            h.erase(h.begin());
            continue;
        }
        const MVec& g = G[*k];
        Rational c = t.c / g.front().c;
        Monomial m = t.m / g.front().m;
        if (step) step(*k, c, m);
        h = axpy(h, c, m, g, order);
    }
    if (rest.empty()) return h;
    rest.insert(rest.end(), std::make_move_iterator(h.begin()), std::make_move_iterator(h.end()));
    return rest;
}

/// Mora's weak normal form for ideals under a local order.
inline MVec mora_reduce(MVec h, const std::vector<MVec>& G, const ModuleOrder& order) {
    const RingSpec& ring = *order.ring();
    std::vector<std::pair<MVec, std::int64_t>> T;
    T.reserve(G.size());
    for (const auto& g : G) T.emplace_back(g, ecart(g, ring));
    while (!h.empty()) {
        const MTerm& lt = h.front();
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < T.size(); ++i) {
            const MVec& g = T[i].first;
            if (g.front().pos != lt.pos || !g.front().m.divides(lt.m)) continue;
            if (!best || T[i].second < T[*best].second) best = i;
        }
        if (!best) break;
        std::int64_t eh = ecart(h, ring);
        MVec g = T[*best].first;
        if (T[*best].second > eh) T.emplace_back(h, eh);
        Rational c = lt.c / g.front().c;
        Monomial m = lt.m / g.front().m;
        h = axpy(h, c, m, g, order);
    }
    return h;
}

inline void make_monic(MVec& v) {
    if (v.empty() || v.front().c == 1) return;
    Rational inv = 1 / v.front().c;
    scale(v, inv);
}

struct Pair {
    std::uint32_t i, j;
    Monomial lcm;
    std::uint32_t pos;
};

/// Result of the raw Buchberger loop: the input generators (zero ones
/// dropped, order kept) followed by the S-pair remainders. Optionally each
/// element carries its expression in terms of the original generators.
struct RawBasis {
    std::vector<MVec> elems;
    std::vector<MVec> reps;
    std::vector<std::uint32_t> origin;  // original generator index, or -1 for added elements
};

inline RawBasis buchberger_raw(const std::vector<MVec>& gens, const ModuleOrder& order, bool track = false) {
    RawBasis out;
    ModuleOrder rep_order(order.ring(), gens.size());
    DivisorIndex index(order.rank());
    std::vector<Pair> pairs;
    const bool ideal = order.rank() == 1;

    auto update = [&](std::uint32_t k) {
        const MVec& hk = out.elems[k];
        const Monomial& lk = hk.front().m;
        const std::uint32_t pk = hk.front().pos;
        // Criterion B on existing pairs.
        std::erase_if(pairs, [&](const Pair& p) {
            if (p.pos != pk || !lk.divides(p.lcm)) return false;
            Monomial a = lcm(out.elems[p.i].front().m, lk);
            Monomial b = lcm(out.elems[p.j].front().m, lk);
            return !(a == p.lcm) && !(b == p.lcm);
        });
        std::vector<Pair> fresh;
        for (std::uint32_t i = 0; i < k; ++i) {
            if (out.elems[i].front().pos != pk) continue;
            fresh.push_back({i, k, lcm(out.elems[i].front().m, lk), pk});
        }
        // Criterion M: drop pairs whose lcm is a proper multiple of another.
        std::vector<Pair> kept;
        for (const auto& p : fresh) {
            bool redundant = std::any_of(fresh.begin(), fresh.end(), [&](const Pair& q) {
                return q.lcm.divides(p.lcm) && !(q.lcm == p.lcm);
            });
            if (!redundant) kept.push_back(p);
        }
        // Criterion F: one pair per lcm class, none if a class member has
        // coprime leading monomials (ideal case only).
        std::vector<bool> done(kept.size(), false);
        for (std::size_t a = 0; a < kept.size(); ++a) {
            if (done[a]) continue;
            bool coprime = false;
            for (std::size_t b = a; b < kept.size(); ++b) {
                if (done[b] || !(kept[b].lcm == kept[a].lcm)) continue;
                done[b] = true;
                if (ideal && out.elems[kept[b].i].front().m.coprime(lk)) coprime = true;
            }
            if (!coprime) pairs.push_back(kept[a]);
        }
    };

    auto add = [&](MVec v, MVec rep, std::uint32_t origin) {
        auto k = static_cast<std::uint32_t>(out.elems.size());
        out.elems.push_back(std::move(v));
        if (track) out.reps.push_back(std::move(rep));
        out.origin.push_back(origin);
        index.add(out.elems.back(), k);
        update(k);
    };

    for (std::uint32_t g = 0; g < gens.size(); ++g) {
        if (gens[g].empty()) continue;
        MVec rep;
        if (track) rep.push_back({order.ring()->one(), g, Rational(1)});
        add(gens[g], std::move(rep), g);
    }

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            int c = order.compare(a.lcm, a.pos, b.lcm, b.pos);
            if (c != 0) return c < 0;
            return std::tie(a.j, a.i) < std::tie(b.j, b.i);
        });
        Pair p = *it;
        pairs.erase(it);
        const MVec& gi = out.elems[p.i];
        const MVec& gj = out.elems[p.j];
        Monomial mi = p.lcm / gi.front().m;
        Monomial mj = p.lcm / gj.front().m;
        Rational ci = 1 / gi.front().c;
        Rational cj = 1 / gj.front().c;
        MVec s = axpy(MVec{}, -ci, mi, gi, order);
        s = axpy(s, cj, mj, gj, order);
        MVec rep;
        if (track) {
            rep = axpy(MVec{}, -ci, mi, out.reps[p.i], rep_order);
            rep = axpy(rep, cj, mj, out.reps[p.j], rep_order);
        }
        s = reduce(std::move(s), out.elems, index, order, true, [&](std::uint32_t k, const Rational& c, const Monomial& m) {
            if (track) rep = axpy(rep, c, m, out.reps[k], rep_order);
        });
        if (s.empty()) continue;
        Rational inv = 1 / s.front().c;
        scale(s, inv);
        if (track) scale(rep, inv);
        add(std::move(s), std::move(rep), static_cast<std::uint32_t>(-1));
    }
    return out;
}

/// Standard basis of an ideal under a local order.
inline std::vector<MVec> mora_standard_basis(const std::vector<MVec>& gens, const ModuleOrder& order) {
    std::vector<MVec> G;
    for (const auto& g : gens) {
        if (g.empty()) continue;
        MVec v = g;
        make_monic(v);
        G.push_back(std::move(v));
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.erase(pairs.begin());
        Monomial l = lcm(G[i].front().m, G[j].front().m);
        MVec s = axpy(MVec{}, -(1 / G[i].front().c), l / G[i].front().m, G[i], order);
        s = axpy(s, 1 / G[j].front().c, l / G[j].front().m, G[j], order);
        s = mora_reduce(std::move(s), G, order);
        if (s.empty()) continue;
        make_monic(s);
        G.push_back(std::move(s));
        for (std::size_t a = 0; a + 1 < G.size(); ++a) pairs.emplace_back(a, G.size() - 1);
    }
    return G;
}

/// Drops elements whose leading term is a multiple of another's.
inline std::vector<MVec> minimalize_leading(std::vector<MVec> G) {
    std::vector<bool> keep(G.size(), true);
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j || G[j].front().pos != G[i].front().pos) continue;
            if (!G[j].front().m.divides(G[i].front().m)) continue;
            redundant = !(G[j].front().m == G[i].front().m) || j < i;
        }
        keep[i] = !redundant;
    }
    std::vector<MVec> out;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (keep[i]) out.push_back(std::move(G[i]));
    return out;
}

inline std::vector<MVec> canonical_basis(std::vector<MVec> G, const ModuleOrder& order, Mode mode) {
    G = minimalize_leading(std::move(G));
    if (mode == Mode::Global) {
        for (std::size_t i = 0; i < G.size(); ++i) {
            std::vector<MVec> others;
            DivisorIndex idx(order.rank());
            for (std::size_t j = 0; j < G.size(); ++j) {
                if (j == i) continue;
                idx.add(G[j], static_cast<std::uint32_t>(others.size()));
                others.push_back(G[j]);
            }
            MTerm lead = G[i].front();
            MVec tail(G[i].begin() + 1, G[i].end());
            tail = reduce(std::move(tail), others, idx, order, true);
            tail.insert(tail.begin(), std::move(lead));
            G[i] = std::move(tail);
        }
    }
    for (auto& g : G) make_monic(g);
    std::sort(G.begin(), G.end(), [&](const MVec& a, const MVec& b) { return order.compare(a.front(), b.front()) < 0; });
    return G;
}

inline void check_mode(const RingSpec& ring, Mode mode) {
    if (mode == Mode::Local && !ring.is_local())
        throw ModeMismatchError("local mode requires a local monomial order");
    if (mode == Mode::Global && ring.is_local())
        throw ModeMismatchError("global mode requires a global monomial order");
}

inline GroebnerBasis make_basis(std::vector<MVec> vecs, const RingPtr& ring, const FreeModuleSpec& amb,
                                const ModuleOrder& order, Mode mode) {
    GroebnerBasis gb{ring, amb, order, mode, {}, std::move(vecs)};
    for (const auto& v : gb.vecs) gb.elements.push_back(to_element(v, ring, amb));
    return gb;
}

/// Syzygies of a Gröbner basis from its S-pairs (Schreyer). Only the pairs
/// whose cofactor on the first index is minimal are used; the results form
/// a Gröbner basis of the syzygy module for the induced order.
struct SchreyerStep {
    ModuleOrder order;
    std::vector<MVec> syzygies;
};

inline SchreyerStep schreyer_step(const std::vector<MVec>& G, const ModuleOrder& order) {
    std::vector<std::pair<Monomial, std::uint32_t>> leading;
    leading.reserve(G.size());
    for (const auto& g : G) leading.emplace_back(g.front().m, g.front().pos);
    SchreyerStep out{ModuleOrder::induced(order, leading), {}};
    const ModuleOrder& next = out.order;
    DivisorIndex index(order.rank());
    for (std::uint32_t k = 0; k < G.size(); ++k) index.add(G[k], k);

    for (std::uint32_t i = 0; i < G.size(); ++i) {
        const Monomial& li = G[i].front().m;
        std::vector<std::pair<Monomial, std::uint32_t>> cand;
        for (std::uint32_t j = i + 1; j < G.size(); ++j) {
            if (G[j].front().pos != G[i].front().pos) continue;
            cand.emplace_back(lcm(li, G[j].front().m) / li, j);
        }
        for (std::size_t a = 0; a < cand.size(); ++a) {
            bool redundant = false;
            for (std::size_t b = 0; b < cand.size() && !redundant; ++b) {
                if (a == b || !cand[b].first.divides(cand[a].first)) continue;
                redundant = !(cand[b].first == cand[a].first) || b < a;
            }
            if (redundant) continue;
            std::uint32_t j = cand[a].second;
            const Monomial& mi = cand[a].first;
            Monomial mj = lcm(li, G[j].front().m) / G[j].front().m;
            Rational ci = 1 / G[i].front().c;
            Rational cj = 1 / G[j].front().c;
            MVec s = axpy(MVec{}, -ci, mi, G[i], order);
            s = axpy(s, cj, mj, G[j], order);
            MVec syz{{mi, i, ci}, {mj, j, -cj}};
            s = reduce(std::move(s), G, index, order, false, [&](std::uint32_t k, const Rational& c, const Monomial& m) {
                syz.push_back({m, k, -c});
            });
            if (!s.empty()) throw std::logic_error("schreyer_step: input is not a Gröbner basis");
            sort_terms(syz, next);
            out.syzygies.push_back(std::move(syz));
        }
    }
    return out;
}

}  // namespace detail

/// Gröbner basis (global) or standard basis (local) of the submodule
/// generated by `gens`. Output is canonical: minimal, monic, sorted by
/// increasing leading term, and tail-reduced in global mode.
inline GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, Mode mode = Mode::Global) {
    if (gens.empty()) throw InvalidInputError("buchberger needs at least one generator");
    const RingPtr ring = gens.front().ring();
    const FreeModuleSpec& amb = gens.front().ambient;
    detail::check_mode(*ring, mode);
    ModuleOrder order(ring, amb.rank());
    std::vector<detail::MVec> vecs;
    for (const auto& g : gens) {
        if (g.rank() != amb.rank()) throw InvalidInputError("generators live in different modules");
        vecs.push_back(detail::to_mvec(g, order));
    }
    std::vector<detail::MVec> basis;
    if (mode == Mode::Global) {
        basis = detail::buchberger_raw(vecs, order).elems;
    } else {
        if (amb.rank() != 1) throw ModeMismatchError("local standard bases are implemented for ideals only");
        basis = detail::mora_standard_basis(vecs, order);
    }
    return detail::make_basis(detail::canonical_basis(std::move(basis), order, mode), ring, amb, order, mode);
}

inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, Mode mode = Mode::Global) {
    std::vector<ModuleElement> elems;
    for (const auto& g : gens) elems.push_back(ModuleElement::from_polynomial(g));
    return buchberger(elems, mode);
}

/// Remainder of e modulo the basis. In local mode this is Mora's weak
/// normal form, which is zero exactly for members of the localized ideal.
inline ModuleElement normal_form(const ModuleElement& e, const GroebnerBasis& gb) {
    if (e.rank() != gb.ambient.rank()) throw InvalidInputError("element and basis live in different modules");
    if (e.is_zero()) return e;
    if (!same_ring(e.ring(), gb.ring)) throw RingMismatchError("element and basis live in different rings");
    detail::check_mode(*gb.ring, gb.mode);
    detail::MVec v = detail::to_mvec(e, gb.order);
    if (gb.mode == Mode::Local) {
        v = detail::mora_reduce(std::move(v), gb.vecs, gb.order);
    } else {
        detail::DivisorIndex idx(gb.ambient.rank());
        for (std::uint32_t k = 0; k < gb.vecs.size(); ++k) idx.add(gb.vecs[k], k);
        v = detail::reduce(std::move(v), gb.vecs, idx, gb.order, true);
    }
    return detail::to_element(v, gb.ring, e.ambient);
}

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (p.is_zero()) return p;
    return normal_form(ModuleElement::from_polynomial(p), gb).components[0];
}

inline bool contains(const GroebnerBasis& gb, const Polynomial& p) { return normal_form(p, gb).is_zero(); }
inline bool contains(const GroebnerBasis& gb, const ModuleElement& e) { return normal_form(e, gb).is_zero(); }

/// Generators of the kernel of e_i -> gb.elements[i].
inline std::vector<ModuleElement> syzygies(const GroebnerBasis& gb) {
    auto step = detail::schreyer_step(gb.vecs, gb.order);
    std::vector<Bidegree> shifts;
    for (const auto& e : gb.elements) {
        try {
            shifts.push_back(e.bidegree());
        } catch (const InhomogeneousError&) {
            shifts.push_back({});
        }
    }
    FreeModuleSpec amb(std::move(shifts));
    std::vector<ModuleElement> out;
    for (const auto& s : step.syzygies) out.push_back(detail::to_element(s, gb.ring, amb));
    return out;
}

/// Ring with the given variables removed; weights and grading are kept.
inline RingPtr subring_without(const RingSpec& ring, const std::set<std::string>& drop) {
    std::vector<std::string> names;
    std::vector<int> f, v;
    std::vector<std::int64_t> g;
    std::optional<std::vector<Rational>> w;
    if (ring.w_weights()) w.emplace();
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (drop.count(ring.name(i))) continue;
        names.push_back(ring.name(i));
        f.push_back(ring.f_weights()[i]);
        v.push_back(ring.v_weights()[i]);
        g.push_back(ring.grading()[i]);
        if (w) w->push_back((*ring.w_weights())[i]);
    }
    return make_ring(RingSpec(names, f, v, w, g));
}

/// Generators of (gens) ∩ Q[remaining variables], expressed in `target`.
inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::set<std::string>& drop_vars,
                                         const RingPtr& target) {
    if (gens.empty()) return {};
    const RingSpec& ring = *gens.front().ring();
    std::vector<bool> block(ring.size(), false);
    for (const auto& name : drop_vars) {
        auto i = ring.index_of(name);
        if (!i) throw InvalidInputError("cannot eliminate unknown variable '" + name + "'");
        block[*i] = true;
    }
    RingPtr elim = make_ring(ring.with_order(MonomialOrder::elimination(block, ring.grading())));
    std::vector<Polynomial> mapped;
    for (const auto& g : gens) mapped.push_back(map_to_ring(g, elim));
    GroebnerBasis gb = buchberger(mapped);
    std::vector<Polynomial> out;
    for (const auto& p : gb.polynomials()) {
        bool uses = false;
        for (std::size_t i = 0; i < ring.size(); ++i)
            if (block[i] && p.uses_variable(i)) uses = true;
        if (!uses) out.push_back(map_to_ring(p, target));
    }
    return out;
}

inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::set<std::string>& drop_vars) {
    if (gens.empty()) return {};
    return eliminate(gens, drop_vars, subring_without(*gens.front().ring(), drop_vars));
}

/// Monomials outside the leading-term ideal of an ideal basis, listed by
/// increasing degree. Their number is the dimension of the quotient.
inline std::vector<Monomial> quotient_staircase(const GroebnerBasis& gb) {
    if (gb.ambient.rank() != 1) throw InvalidInputError("staircase is defined for ideals");
    const RingSpec& ring = *gb.ring;
    const std::size_t n = ring.size();
    std::vector<Monomial> leads;
    for (const auto& v : gb.vecs) leads.push_back(v.front().m);
    std::vector<unsigned> bound(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& m : leads) {
            bool pure = m.total_degree() == m[i];
            if (pure && (bound[i] == 0 || m[i] < bound[i])) bound[i] = m[i];
        }
        if (bound[i] == 0 && !std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); }))
            throw InfiniteDimensionalError("quotient is infinite-dimensional: no pure power of " + ring.name(i) +
                                           " among leading terms");
    }
    if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); })) return {};
    std::vector<Monomial> out;
    Monomial cur(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            for (const auto& l : leads)
                if (l.divides(cur)) return;
            out.push_back(cur);
            return;
        }
        for (unsigned e = 0; e < bound[i]; ++e) {
            cur.set(i, e);
            rec(i + 1);
        }
        cur.set(i, 0);
    };
    rec(0);
    MonomialOrder graded = MonomialOrder::graded(ring.grading());
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return graded.compare(a, b) < 0; });
    return out;
}

}  // namespace bigres

#endif
