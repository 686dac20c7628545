#include <gtest/gtest.h>

#include "hwdim/hwdim.hpp"
#include "oracle/cartan_oracle.hpp"

#include <numeric>

using namespace hwdim;

namespace {

std::vector<LieType> all_types(int hi = 12) { return types_in_rank_range(1, hi); }

RootVec ev(const RootSystem& rs, std::initializer_list<std::pair<int, int>> terms)
{
    RootVec v(rs.ambient_dim(), Rational(0));
    for (auto [i, c] : terms) v[static_cast<std::size_t>(i - 1)] += c;
    return v;
}

} // namespace

TEST(LieTypeParse, AcceptsFamilyAndRankCaseInsensitive)
{
    EXPECT_EQ(parse_type("C3"), (LieType{Family::C, 3}));
    EXPECT_EQ(parse_type("e7"), (LieType{Family::E, 7}));
    EXPECT_EQ(to_string(parse_type("g2")), "G2");
}

TEST(LieTypeParse, RejectsB2WithHint)
{
    try {
        parse_type("B2");
        FAIL() << "B2 accepted";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("C2"), std::string::npos);
    }
}

TEST(LieTypeParse, RejectsInvalidRanks)
{
    for (const char* bad : {"A0", "C1", "D3", "E5", "E9", "F3", "G3", "X4", "A", "A1x"})
        EXPECT_THROW(parse_type(bad), std::invalid_argument) << bad;
    EXPECT_THROW(build(LieType{Family::D, 3}), std::invalid_argument);
}

TEST(LieTypeParse, RankViolationNamesTheConstraint)
{
    EXPECT_NE(rank_violation({Family::D, 2}).find("4"), std::string::npos);
    EXPECT_TRUE(rank_violation({Family::D, 4}).empty());
}

TEST(RootSystem, CartanMatrixMatchesDiagram)
{
    for (LieType t : all_types()) {
        const auto rs = build(t);
        EXPECT_EQ(rs.cartan_matrix(), oracle::cartan(family_letter(t.family), t.rank)) << to_string(t);
    }
}

TEST(RootSystem, PositiveRootCounts)
{
    for (LieType t : all_types())
        EXPECT_EQ(static_cast<int>(build(t).num_positive_roots()), oracle::positive_root_count(family_letter(t.family), t.rank))
            << to_string(t);
}

TEST(RootSystem, RhoIsHalfSumAndSumOfFundamentalWeights)
{
    for (LieType t : all_types()) {
        const auto rs = build(t);
        RootVec half(rs.ambient_dim(), Rational(0)), sum(rs.ambient_dim(), Rational(0));
        for (const auto& a : rs.positive_roots())
            for (std::size_t i = 0; i < half.size(); ++i) half[i] += a[i] / 2;
        for (const auto& l : rs.fundamental_weights())
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += l[i];
        EXPECT_EQ(half, rs.rho()) << to_string(t);
        EXPECT_EQ(sum, rs.rho()) << to_string(t);
    }
}

TEST(RootSystem, FundamentalWeightsAreDualToSimpleCoroots)
{
    for (LieType t : all_types()) {
        const auto rs = build(t);
        for (int i = 0; i < t.rank; ++i)
            for (int j = 0; j < t.rank; ++j)
                EXPECT_EQ(pair(rs, rs.fundamental_weights()[static_cast<std::size_t>(i)],
                               rs.simple_roots()[static_cast<std::size_t>(j)]),
                          Rational(i == j ? 1 : 0))
                    << to_string(t);
    }
}

TEST(RootSystem, RhoPairingIsHeightInSimplyLacedTypes)
{
    for (LieType t : all_types()) {
        const auto rs = build(t);
        const bool simply_laced = t.family == Family::A || t.family == Family::D || t.family == Family::E;
        for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
            const auto& c = rs.root_coefficients()[k];
            // Height of alpha^vee in the simple coroots: sum c_i |alpha_i|^2 / |alpha|^2.
            Rational coroot_height = 0;
            for (int i = 0; i < t.rank; ++i)
                coroot_height += Rational(c[static_cast<std::size_t>(i)]) *
                                 inner(rs, rs.simple_roots()[static_cast<std::size_t>(i)], rs.simple_roots()[static_cast<std::size_t>(i)]) /
                                 rs.root_norms()[k];
            const Rational p = pair(rs, rs.rho(), rs.positive_roots()[k]);
            EXPECT_EQ(p, coroot_height) << to_string(t);
            if (simply_laced) EXPECT_EQ(p, Rational(std::accumulate(c.begin(), c.end(), 0))) << to_string(t);
            EXPECT_EQ(p, Rational(rs.rho_pairings()[k]));
        }
    }
}

TEST(RootSystem, RhoPairingDiffersFromRootHeightInBn)
{
    const auto rs = build({Family::B, 4});
    const auto e1 = ev(rs, {{1, 1}});
    EXPECT_EQ(pair(rs, rs.rho(), e1), Rational(7)); // height of e1 is 4
}

TEST(RootSystem, PairIsInvariantUnderRescaling)
{
    for (LieType t : all_types(8)) {
        const auto rs = build(t);
        for (const auto& a : rs.positive_roots()) {
            const Rational s2 = 2 * rs.form_scale();
            const Rational rescaled = 2 * (s2 * detail::dot(rs.rho(), a)) / (s2 * detail::dot(a, a));
            EXPECT_EQ(pair(rs, rs.rho(), a), rescaled);
        }
    }
}

TEST(RootSystem, GcdOfRootInnerProducts)
{
    for (LieType t : all_types()) {
        const auto rs = build(t);
        std::vector<Rational> xs;
        for (const auto& a : rs.positive_roots())
            for (const auto& b : rs.positive_roots()) xs.push_back(inner(rs, a, b));
        const Rational g = rational_gcd(xs);
        // A1 and C2 keep the family normalization of A_n and C_n.
        const bool family_scale = t == LieType{Family::A, 1} || t == LieType{Family::C, 2};
        EXPECT_EQ(g, Rational(family_scale ? 2 : 1)) << to_string(t);
    }
}

TEST(RootSystem, FamilyNormalizationForSmallRanks)
{
    EXPECT_EQ(build({Family::A, 1}).form_scale(), Rational(1));
    EXPECT_EQ(build({Family::C, 2}).form_scale(), Rational(1));
    // C_n: (rho, alpha_h) = 2n, as for n >= 3.
    for (int n = 2; n <= 6; ++n) {
        const auto rs = build({Family::C, n});
        EXPECT_EQ(inner(rs, rs.rho(), rs.highest_root()), Rational(2 * n));
    }
}

TEST(RootSystem, InnerAndPairRejectBadInput)
{
    const auto rs = build({Family::A, 3});
    EXPECT_THROW(inner(rs, RootVec(2, Rational(0)), rs.rho()), std::invalid_argument);
    EXPECT_THROW(pair(rs, rs.rho(), RootVec(rs.ambient_dim(), Rational(0))), std::invalid_argument);
}

TEST(RootSystem, HighestRoots)
{
    const auto b4 = build({Family::B, 4});
    EXPECT_EQ(b4.highest_root(), ev(b4, {{1, 1}, {2, 1}}));
    EXPECT_EQ(b4.highest_short_root(), ev(b4, {{1, 1}}));
    EXPECT_EQ(inner(b4, b4.rho(), b4.highest_root()), Rational(6));
    const auto c3 = build({Family::C, 3});
    EXPECT_EQ(c3.highest_root(), ev(c3, {{1, 2}}));
}

TEST(Height, Examples)
{
    EXPECT_EQ(height(DominantWeight::zero(5)), 0);
    EXPECT_EQ(height(DominantWeight({1, 0, 0, 1})), 2);
    EXPECT_EQ(height(DominantWeight::fundamental(3, 3, 3)), 3);
    EXPECT_THROW(DominantWeight({1, -1}), std::invalid_argument);
    EXPECT_EQ(to_string(DominantWeight({2, 0, 1})), "2L1+L3");
    EXPECT_EQ(to_string(DominantWeight::zero(2)), "0");
}

TEST(Nilradical, Sizes)
{
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(nilradical_roots(build({Family::A, n}), 1).size(), static_cast<std::size_t>(n));
    for (int n = 2; n <= 10; ++n) EXPECT_EQ(nilradical_roots(build({Family::C, n}), 1).size(), static_cast<std::size_t>(2 * n - 1));
    for (int n = 4; n <= 10; ++n) EXPECT_EQ(nilradical_roots(build({Family::D, n}), 1).size(), static_cast<std::size_t>(2 * n - 2));
    EXPECT_THROW(nilradical_roots(build({Family::A, 3}), 4), std::out_of_range);
    EXPECT_THROW(nilradical_roots(build({Family::A, 3}), 0), std::out_of_range);
}

TEST(Nilradical, BnFirstNodeRootsAndPairings)
{
    for (int n = 3; n <= 8; ++n) {
        const auto rs = build({Family::B, n});
        std::vector<RootVec> b;
        for (int i = 1; i <= n - 1; ++i) b.push_back(ev(rs, {{1, 1}, {i + 1, -1}}));
        for (int i = n; i <= 2 * n - 2; ++i) b.push_back(ev(rs, {{1, 1}, {2 * n - i, 1}}));
        b.push_back(ev(rs, {{1, 1}}));
        auto r1 = nilradical_roots(rs, 1);
        ASSERT_EQ(r1.size(), b.size());
        for (const auto& x : b) EXPECT_NE(std::find(r1.begin(), r1.end(), x), r1.end());
        const auto l1 = rs.fundamental_weights()[0];
        for (std::size_t i = 0; i + 1 < b.size(); ++i) EXPECT_EQ(pair(rs, l1, b[i]), Rational(1));
        EXPECT_EQ(pair(rs, l1, b.back()), Rational(2)); // the last root e_1
    }
}

TEST(Nilradical, DnFirstNodeUsesFullIndexRange)
{
    for (int n = 4; n <= 8; ++n) {
        const auto rs = build({Family::D, n});
        auto r1 = nilradical_roots(rs, 1);
        for (int i = n; i <= 2 * n - 2; ++i) {
            const auto v = ev(rs, {{1, 1}, {2 * n - i, 1}});
            EXPECT_NE(std::find(r1.begin(), r1.end(), v), r1.end());
        }
    }
}

TEST(Automorphisms, OrbitExamples)
{
    using V = std::vector<std::vector<int>>;
    EXPECT_EQ(diagram_automorphism_orbits(LieType{Family::D, 4}), (V{{1, 3, 4}, {2}}));
    EXPECT_EQ(diagram_automorphism_orbits(LieType{Family::E, 6}), (V{{1, 6}, {2}, {3, 5}, {4}}));
    EXPECT_EQ(diagram_automorphism_orbits(LieType{Family::F, 4}), (V{{1}, {2}, {3}, {4}}));
    EXPECT_EQ(diagram_automorphisms(build({Family::D, 4})).size(), 6u);
    EXPECT_EQ(diagram_automorphisms(build({Family::A, 5})).size(), 2u);
    EXPECT_EQ(diagram_automorphisms(build({Family::E, 8})).size(), 1u);
}

TEST(Automorphisms, OrbitOfWeight)
{
    const auto rs = build({Family::D, 4});
    const auto orbit = automorphism_orbit(rs, DominantWeight({2, 0, 0, 0}));
    EXPECT_EQ(orbit.size(), 3u);
    EXPECT_EQ(automorphism_orbit(rs, DominantWeight({0, 1, 0, 0})).size(), 1u);
}
