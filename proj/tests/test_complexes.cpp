#include <gtest/gtest.h>

#include "bigres/cli.hpp"
#include "oracles.hpp"

using namespace bigres;

namespace {

RingPtr graded_ring(std::vector<std::string> names) {
    std::vector<int> f(names.size(), 1), v(names.size(), 0);
    return make_ring(RingSpec(std::move(names), f, v));
}

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }

MatrixMap scalar_map(const FreeComplex& src, const FreeComplex& tgt, const Polynomial& p) {
    MatrixMap m(tgt.ring, src.base, tgt.base);
    m.at(0, 0) = p;
    return m;
}

std::vector<std::size_t> minimal_betti(const FreeComplex& c) { return betti_table(minimalize(c)).betti(); }

bool exact(const FreeComplex& c) {
    for (std::size_t p = 1; p <= c.length(); ++p)
        if (!homology_is_zero(c, p)) return false;
    return true;
}

// Position of ω ⊗ X1^a X2^(j-a) in a generalized Koszul basis.
std::size_t gk_index(std::size_t n, const std::vector<std::size_t>& I, int j, int a) {
    auto subs = detail::subsets(n, I.size());
    auto pos = static_cast<std::size_t>(std::find(subs.begin(), subs.end(), I) - subs.begin());
    return pos * static_cast<std::size_t>(j + 1) + static_cast<std::size_t>(j - a);
}

// ω ⊗ η -> c τ ω ⊗ X2^{-1} η from Λ^p ⊗ S_j to Λ^p ⊗ S_{j-1}.
MatrixMap tau_lower_x2(const FreeModuleSpec& src, const FreeModuleSpec& tgt, std::size_t n, std::size_t p, int j,
                       const Polynomial& tau, const Rational& c) {
    MatrixMap m(tau.ring(), src, tgt);
    for (const auto& I : detail::subsets(n, p))
        for (int a = j; a >= 0; --a)
            if (j - a > 0) m.at(gk_index(n, I, j - 1, a), gk_index(n, I, j, a)) = c * tau;
    return m;
}

// ω -> c τ δ_1(ω) from Λ^p ⊗ S_0 to Λ^{p-1} ⊗ S_0.
MatrixMap tau_delta1(const FreeModuleSpec& src, const FreeModuleSpec& tgt, std::size_t n, std::size_t p,
                     const std::vector<Polynomial>& row, const Polynomial& tau, const Rational& c) {
    MatrixMap m(tau.ring(), src, tgt);
    auto subs = detail::subsets(n, p);
    for (std::size_t col = 0; col < subs.size(); ++col)
        for (auto& [J, coef] : detail::contract(subs[col], row)) m.at(gk_index(n, J, 0, 0), col) += c * tau * coef;
    return m;
}

struct NCones {
    FreeComplex K_minus, K0, K0_shifted, K1, cone_RJ, cone_ann, result;
    ChainMap alpha_RJ, alpha_ann, alpha;
};

// R/J as the cone of K(-1) -> K(0), ann δ/J as the cone of K(0) -> K(1),
// and bigr N as the cone of the lift of X1 -> tτ + χ, X2 -> f.
NCones build_cones(std::int64_t n) {
    auto in = cli::fermat_cubic(n);
    RingPtr R = bigr_ring(in.n, in.w);
    auto A = jacobian_matrix(in, R);
    const std::size_t N = in.n;
    Polynomial tau = Polynomial::variable(R, "tau");
    NCones s;
    s.K_minus = generalized_koszul({A, -1, 0, Bidegree{0, 1}});
    s.K0 = generalized_koszul({A, 0, 0, Bidegree{0, 0}});
    s.alpha_RJ = ChainMap{s.K_minus, s.K0, {}};
    {
        MatrixMap a0(R, s.K_minus.base, s.K0.base);
        for (std::size_t i = 0; i < N; ++i) a0.at(0, i) = tau * A[0][i];
        s.alpha_RJ.levels.push_back(a0);
        for (std::size_t i = 1; i <= s.K_minus.length(); ++i)
            s.alpha_RJ.levels.push_back(tau_lower_x2(s.K_minus.module(i), s.K0.module(i), N, i + 1,
                                                     static_cast<int>(i), tau, 1));
    }
    s.cone_RJ = mapping_cone(s.alpha_RJ);

    s.K0_shifted = generalized_koszul({A, 0, 0, Bidegree{1, 1}});
    s.K1 = generalized_koszul({A, 1, 0, Bidegree{1, 0}});
    s.alpha_ann = ChainMap{s.K0_shifted, s.K1, {}};
    {
        MatrixMap a0(R, s.K0_shifted.base, s.K1.base);
        a0.at(1, 0) = tau;  // basis of S_1 is (X1, X2)
        s.alpha_ann.levels.push_back(a0);
        if (s.K0_shifted.length() >= 1)
            s.alpha_ann.levels.push_back(tau_delta1(s.K0_shifted.module(1), s.K1.module(1), N, 2, A[0], tau, -1));
        for (std::size_t i = 2; i <= s.K0_shifted.length(); ++i)
            s.alpha_ann.levels.push_back(tau_lower_x2(s.K0_shifted.module(i), s.K1.module(i), N, i + 1,
                                                      static_cast<int>(i) - 1, tau, -1));
    }
    s.cone_ann = mapping_cone(s.alpha_ann);

    MatrixMap f0(R, s.cone_ann.base, s.cone_RJ.base);
    f0.at(0, 0) = Polynomial::variable(R, "t") * tau + euler_symbol(in, R);
    f0.at(0, 1) = map_to_ring(in.f, R);
    s.alpha = lift_chain_map(f0, s.cone_ann, s.cone_RJ);
    s.result = mapping_cone(s.alpha);
    return s;
}

}  // namespace

TEST(Koszul, SignConvention) {
    auto R = graded_ring({"x", "y"});
    auto K = koszul({P(R, "x"), P(R, "y")});
    ASSERT_EQ(K.ranks(), (std::vector<std::size_t>{1, 2, 1}));
    EXPECT_EQ(K.d(1).at(0, 0), P(R, "x"));
    EXPECT_EQ(K.d(1).at(0, 1), P(R, "y"));
    // d(e1 ∧ e2) = x e2 - y e1
    EXPECT_EQ(K.d(2).at(0, 0), P(R, "-y"));
    EXPECT_EQ(K.d(2).at(1, 0), P(R, "x"));
    EXPECT_TRUE(is_complex(K));
    EXPECT_TRUE(K.d(2).is_bihomogeneous());
    EXPECT_EQ(K.module(2).shifts, (std::vector<Bidegree>{{2, 0}}));
}

TEST(Koszul, RejectsZeroOrEmpty) {
    auto R = graded_ring({"x"});
    EXPECT_THROW(koszul({}), InvalidInputError);
    EXPECT_THROW(koszul({Polynomial(R)}), InvalidInputError);
}

TEST(GeneralizedKoszul, EagonNorthcottGivesSij) {
    auto in = cli::fermat_cubic(3);
    RingPtr r = dsfs_ring(3, in.w, false);
    auto K = generalized_koszul({jacobian_matrix(in, r), 0, 0, {}});
    EXPECT_TRUE(is_complex(K));
    EXPECT_TRUE(exact(K));
    auto s = s_ij(in, r);
    ASSERT_EQ(K.d(1).cols(), s.size());
    for (std::size_t j = 0; j < s.size(); ++j) EXPECT_EQ(K.d(1).at(0, j), s[j]);
}

TEST(GeneralizedKoszul, RankFormulas) {
    for (std::int64_t n = 2; n <= 4; ++n) {
        auto in = cli::fermat_cubic(n);
        RingPtr r = dsfs_ring(in.n, in.w, false);
        auto A = jacobian_matrix(in, r);
        auto EN = generalized_koszul({A, 0, 0, {}});
        std::vector<std::size_t> en{1};
        for (std::int64_t h = 1; h <= n - 1; ++h) en.push_back(static_cast<std::size_t>(h * binomial(n, h + 1)));
        EXPECT_EQ(EN.ranks(), en) << n;
        {
            auto BR = generalized_koszul({A, 1, 0, {}});
            std::vector<std::size_t> br{2, static_cast<std::size_t>(n)};
            for (std::int64_t h = 2; h <= n - 1; ++h) br.push_back(static_cast<std::size_t>((h - 1) * binomial(n, h + 1)));
            EXPECT_EQ(BR.ranks(), br) << n;
            EXPECT_TRUE(is_complex(BR));
            EXPECT_TRUE(exact(BR)) << n;
        }
    }
}

TEST(GeneralizedKoszul, Truncation) {
    auto in = cli::fermat_cubic(3);
    RingPtr r = dsfs_ring(3, in.w, false);
    auto full = generalized_koszul({jacobian_matrix(in, r), 0, 0, {}});
    auto trunc = generalized_koszul({jacobian_matrix(in, r), 0, 1, {}});
    auto ranks = full.ranks();
    EXPECT_EQ(trunc.ranks(), (std::vector<std::size_t>(ranks.begin() + 1, ranks.end())));
    EXPECT_TRUE(trunc.d(1) == full.d(2));
}

TEST(GeneralizedKoszul, Hypotheses) {
    auto in = cli::fermat_cubic(3);
    RingPtr r = dsfs_ring(3, in.w, false);
    auto A = jacobian_matrix(in, r);
    EXPECT_THROW(generalized_koszul({A, 2, 0, {}}), HypothesisError);
    EXPECT_THROW(generalized_koszul({A, -2, 0, {}}), HypothesisError);
    EXPECT_THROW(generalized_koszul({A, 0, 3, {}}), HypothesisError);
    EXPECT_THROW(generalized_koszul({A, 0, -1, {}}), HypothesisError);
    EXPECT_NO_THROW(generalized_koszul({A, -1, 0, {}}));
    auto in2 = cli::fermat_cubic(2);
    RingPtr r2 = dsfs_ring(2, in2.w, false);
    EXPECT_NO_THROW(generalized_koszul({jacobian_matrix(in2, r2), 1, 0, {}}));
    EXPECT_THROW(generalized_koszul({jacobian_matrix(in2, r2), 2, 0, {}}), HypothesisError);
}

TEST(LiftChainMap, MultiplicationMap) {
    auto R = graded_ring({"x", "y", "z"});
    auto K = koszul({P(R, "x"), P(R, "y")});
    auto Ks = shift_complex(K, {1, 0});
    auto a = lift_chain_map(scalar_map(Ks, K, P(R, "z")), Ks, K);
    EXPECT_TRUE(is_chain_map(a));
    ASSERT_EQ(a.levels.size(), 3u);
    for (std::size_t i = 0; i < a.levels.size(); ++i)
        for (std::size_t r = 0; r < a.levels[i].rows(); ++r)
            for (std::size_t c = 0; c < a.levels[i].cols(); ++c)
                EXPECT_EQ(a.levels[i].at(r, c), r == c ? P(R, "z") : Polynomial(R));
}

TEST(LiftChainMap, ZeroMap) {
    auto R = graded_ring({"x", "y"});
    auto K = koszul({P(R, "x"), P(R, "y")});
    auto a = lift_chain_map(scalar_map(K, K, Polynomial(R)), K, K);
    for (const auto& l : a.levels) EXPECT_TRUE(l.is_zero());
}

TEST(LiftChainMap, NotLiftable) {
    auto R = graded_ring({"x", "y"});
    auto Kx = koszul({P(R, "x")});
    auto Ky = koszul({P(R, "y")});
    EXPECT_THROW(lift_chain_map(scalar_map(Kx, Ky, Polynomial::constant(R, 1)), Kx, Ky), LiftError);
}

TEST(MappingCone, MultiplicationGivesKoszul) {
    auto R = graded_ring({"x", "y"});
    auto Ky = koszul({P(R, "y")});
    auto cone = mapping_cone(lift_chain_map(scalar_map(shift_complex(Ky, {1, 0}), Ky, P(R, "x")),
                                            shift_complex(Ky, {1, 0}), Ky));
    EXPECT_TRUE(is_complex(cone));
    EXPECT_TRUE(exact(cone));
    EXPECT_EQ(betti_table(cone), betti_table(koszul({P(R, "x"), P(R, "y")})));
}

TEST(MappingCone, IdentityIsContractible) {
    auto R = graded_ring({"x"});
    auto K = koszul({P(R, "x")});
    auto cone = mapping_cone(lift_chain_map(scalar_map(K, K, Polynomial::constant(R, 1)), K, K));
    EXPECT_TRUE(is_complex(cone));
    EXPECT_EQ(cone.ranks(), (std::vector<std::size_t>{1, 2, 1}));
    auto m = minimalize(cone);
    EXPECT_EQ(m.base.rank(), 0u);
    EXPECT_EQ(m.length(), 0u);
}

// The explicit comparison maps, with the signs adjusted to the differential
// d(e_i ∧ e_j) = f'_i ξ_j - f'_j ξ_i used here: α_0 of K(-1) -> K(0) and α_1
// of K(0) -> K(1) carry the opposite sign.
TEST(ConeOfCones, ExplicitComparisonMapsAreChainMaps) {
    for (std::int64_t n = 2; n <= 3; ++n) {
        auto s = build_cones(n);
        EXPECT_TRUE(is_chain_map(s.alpha_RJ)) << n;
        EXPECT_TRUE(is_chain_map(s.alpha_ann)) << n;
        EXPECT_TRUE(is_chain_map(s.alpha)) << n;
        for (const auto& l : s.alpha_RJ.levels) EXPECT_TRUE(l.is_bihomogeneous());
        for (const auto& l : s.alpha_ann.levels) EXPECT_TRUE(l.is_bihomogeneous());
    }
}

TEST(ConeOfCones, OppositeSignFailsWithThisDifferential) {
    auto s = build_cones(2);
    auto flipped = s.alpha_RJ;
    flipped.levels[0] = MatrixMap(flipped.levels[0].ring, flipped.levels[0].source, flipped.levels[0].target);
    for (std::size_t i = 0; i < s.alpha_RJ.levels[0].cols(); ++i) flipped.levels[0].at(0, i) = -s.alpha_RJ.levels[0].at(0, i);
    EXPECT_FALSE(is_chain_map(flipped));
}

TEST(ConeOfCones, IntermediateConesAreMinimalResolutions) {
    for (std::int64_t n = 2; n <= 3; ++n) {
        auto s = build_cones(n);
        for (const auto* c : {&s.cone_RJ, &s.cone_ann}) {
            EXPECT_TRUE(is_complex(*c));
            EXPECT_TRUE(exact(*c)) << n;
            EXPECT_NO_THROW(betti_table(*c)) << "cone should already be minimal, n = " << n;
        }
        auto in = cli::fermat_cubic(n);
        RingPtr R = s.cone_RJ.ring;
        std::vector<Polynomial> J = s_ij(in, R);
        for (auto& d : detail::derivatives_in(in, R)) J.push_back(d * Polynomial::variable(R, "tau"));
        EXPECT_EQ(betti_table(s.cone_RJ).betti(), betti_table(minimalize(resolve(ideal_presentation(R, J), R->size() + 1))).betti());
    }
}

TEST(ConeOfCones, FinalConeGivesBettiNumbersOfN) {
    for (std::int64_t n = 2; n <= 3; ++n) {
        auto s = build_cones(n);
        EXPECT_TRUE(is_complex(s.result));
        EXPECT_TRUE(exact(s.result));
        auto t = betti_table(minimalize(s.result));
        EXPECT_EQ(BettiPolynomial::from_table(t), thm3_closed_form(n)) << n;
        EXPECT_EQ(t, betti_of_Nf(cli::fermat_cubic(n))) << n;
    }
}
