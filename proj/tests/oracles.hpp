#ifndef BIGRES_TESTS_ORACLES_HPP
#define BIGRES_TESTS_ORACLES_HPP

// Brute-force linear algebra used to check the library independently of
// its Gröbner basis and resolution code.

#include <functional>
#include <map>
#include <vector>

#include "bigres/polynomial.hpp"

namespace oracle {

using bigres::Monomial;
using bigres::Polynomial;
using bigres::Rational;

inline std::size_t rank(std::vector<std::vector<Rational>> rows) {
    std::size_t r = 0;
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Rational f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < ncols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

/// Monomials in nvars variables with weighted degree exactly d.
inline std::vector<Monomial> monomials(std::size_t nvars, const std::vector<std::int64_t>& w, std::int64_t d) {
    std::vector<Monomial> out;
    Monomial cur(nvars);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i == nvars) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (std::int64_t e = 0; e * w[i] <= left; ++e) {
            cur.set(i, static_cast<unsigned>(e));
            rec(i + 1, left - e * w[i]);
        }
        cur.set(i, 0);
    };
    if (d >= 0) rec(0, d);
    return out;
}

/// dim Q[x] / (I + m^N): monomials of degree < N modulo the span of all
/// truncated multiples m*g. Equals the local length of I once m^N lies in
/// the localized ideal.
inline std::size_t truncated_dimension(const std::vector<Polynomial>& gens, std::size_t nvars, int N) {
    std::vector<std::int64_t> ones(nvars, 1);
    std::map<std::vector<unsigned>, std::size_t> index;
    std::vector<Monomial> basis;
    for (int d = 0; d < N; ++d)
        for (auto& m : monomials(nvars, ones, d)) {
            std::vector<unsigned> key(nvars);
            for (std::size_t i = 0; i < nvars; ++i) key[i] = m[i];
            index[key] = basis.size();
            basis.push_back(m);
        }
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : gens)
        for (const auto& m : basis) {
            std::vector<Rational> row(basis.size());
            bool any = false;
            for (const auto& t : g.terms()) {
                Monomial p = t.m * m;
                if (static_cast<int>(p.total_degree()) >= N) continue;
                std::vector<unsigned> key(nvars);
                for (std::size_t i = 0; i < nvars; ++i) key[i] = p[i];
                row[index.at(key)] += t.c;
                any = true;
            }
            if (any) rows.push_back(std::move(row));
        }
    return basis.size() - rank(std::move(rows));
}

/// Dimension in degree D of the kernel of (a_i) -> Σ a_i g_i, for g_i
/// homogeneous in the ring grading.
inline std::size_t kernel_dimension(const std::vector<Polynomial>& gens, std::int64_t D) {
    const auto& ring = *gens.front().ring();
    std::map<std::vector<unsigned>, std::size_t> index;
    auto key = [&](const Monomial& m) {
        std::vector<unsigned> k(ring.size());
        for (std::size_t i = 0; i < ring.size(); ++i) k[i] = m[i];
        return k;
    };
    for (auto& m : monomials(ring.size(), ring.grading(), D)) index.emplace(key(m), index.size());
    std::vector<std::vector<Rational>> cols;
    for (const auto& g : gens) {
        std::int64_t dg = *bigres::graded_degree(g);
        for (auto& m : monomials(ring.size(), ring.grading(), D - dg)) {
            std::vector<Rational> col(index.size());
            for (const auto& t : g.terms()) col[index.at(key(t.m * m))] += t.c;
            cols.push_back(std::move(col));
        }
    }
    std::size_t n = cols.size();
    return n - rank(std::move(cols));
}

/// Dimension in degree D of the span of monomial multiples of the given
/// vectors (components homogeneous, component i carrying degree shift s_i).
inline std::size_t span_dimension(const std::vector<std::vector<Polynomial>>& vecs, const std::vector<std::int64_t>& shifts,
                                  std::int64_t D) {
    if (vecs.empty()) return 0;
    const auto& ring = *vecs.front().front().ring();
    std::map<std::pair<std::size_t, std::vector<unsigned>>, std::size_t> index;
    auto key = [&](const Monomial& m) {
        std::vector<unsigned> k(ring.size());
        for (std::size_t i = 0; i < ring.size(); ++i) k[i] = m[i];
        return k;
    };
    for (std::size_t c = 0; c < shifts.size(); ++c)
        for (auto& m : monomials(ring.size(), ring.grading(), D - shifts[c])) index.emplace(std::make_pair(c, key(m)), index.size());
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : vecs) {
        std::int64_t dv = -1;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!v[c].is_zero()) dv = *bigres::graded_degree(v[c]) + shifts[c];
        if (dv < 0) continue;
        for (auto& m : monomials(ring.size(), ring.grading(), D - dv)) {
            std::vector<Rational> row(index.size());
            for (std::size_t c = 0; c < v.size(); ++c)
                for (const auto& t : v[c].terms()) row[index.at({c, key(t.m * m)})] += t.c;
            rows.push_back(std::move(row));
        }
    }
    return rank(std::move(rows));
}

}  // namespace oracle

#endif
