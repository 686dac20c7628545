#include <gtest/gtest.h>

#include "hwdim/hwdim.hpp"
#include "hwdim/json_io.hpp"

#include <algorithm>

using namespace hwdim;

namespace {

DominantWeight fw(int n, int i, int t = 1) { return DominantWeight::fundamental(n, i, t); }

std::size_t root_of(const RootSystem& rs, std::vector<int> coeffs)
{
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
        if (rs.root_coefficients()[k] == coeffs) return k;
    throw std::logic_error("no such root");
}

// Brute-force minimum over the height-t simplex.
std::pair<BigInt, std::vector<DominantWeight>> brute_min(const RootSystem& rs, int t)
{
    BigInt best = -1;
    std::vector<DominantWeight> at;
    for (const auto& w : weights_of_height(rs.rank(), t)) {
        const BigInt d = weyl_dim(rs, w);
        if (best < 0 || d < best) {
            best = d;
            at.clear();
        }
        if (d == best) at.push_back(w);
    }
    std::sort(at.begin(), at.end());
    return {best, at};
}

} // namespace

TEST(MinDimAtHeight, D4HeightOne)
{
    const auto hm = min_dim_at_height(build({Family::D, 4}), 1);
    EXPECT_EQ(hm.min_dim, 8);
    std::vector<DominantWeight> want{fw(4, 1), fw(4, 3), fw(4, 4)};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(hm.minimizing_weights, want);
}

TEST(MinDimAtHeight, F4HeightOne)
{
    const auto hm = min_dim_at_height(build({Family::F, 4}), 1);
    EXPECT_EQ(hm.min_dim, 26);
    EXPECT_EQ(hm.minimizing_weights, std::vector<DominantWeight>{fw(4, 4)});
}

TEST(MinDimAtHeight, A3HeightTwo)
{
    const auto hm = min_dim_at_height(build({Family::A, 3}), 2);
    EXPECT_EQ(hm.min_dim, 10);
    std::vector<DominantWeight> want{fw(3, 1, 2), fw(3, 3, 2)};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(hm.minimizing_weights, want);
}

TEST(MinDimAtHeight, RejectsHeightZero)
{
    EXPECT_THROW(min_dim_at_height(build({Family::A, 3}), 0), std::invalid_argument);
}

TEST(Theorem1, A2HeightThree)
{
    const auto rep = verify_theorem1(build({Family::A, 2}), 3);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.enumerated, 4);
    EXPECT_EQ(rep.observed_min, 10);
    std::vector<DominantWeight> want{fw(2, 1, 3), fw(2, 2, 3)};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(rep.observed_minimizers, want);
}

TEST(Theorem1, B3HeightOne)
{
    const auto rs = build({Family::B, 3});
    EXPECT_EQ(weyl_dim(rs, fw(3, 1)), 7);
    EXPECT_EQ(weyl_dim(rs, fw(3, 2)), 21);
    EXPECT_EQ(weyl_dim(rs, fw(3, 3)), 8);
    const auto rep = verify_theorem1(rs, 1);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.observed_min, 7);
    EXPECT_EQ(rep.observed_minimizers, std::vector<DominantWeight>{fw(3, 1)});
}

TEST(Theorem1, G2HeightTwo)
{
    const auto rs = build({Family::G, 2});
    const auto rep = verify_theorem1(rs, 2);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.enumerated, 3);
    EXPECT_EQ(rep.observed_min, 27);
    EXPECT_EQ(rep.observed_minimizers, std::vector<DominantWeight>{fw(2, 1, 2)});
    const auto f = table4_rows().front().f;
    EXPECT_EQ(f(Rational(2)) / f(Rational(0)), Rational(27));
}

TEST(Theorem1, SmallRankGrid)
{
    for (LieType t : types_in_rank_range(1, 6)) {
        const auto rs = build(t);
        const int tmax = t == LieType{Family::E, 6} ? 2 : 3;
        for (int h = 1; h <= tmax; ++h) {
            const auto rep = verify_theorem1(rs, h);
            EXPECT_TRUE(rep.pass) << to_string(t) << " t=" << h;
            const auto [m, at] = brute_min(rs, h);
            EXPECT_EQ(rep.observed_min, m);
            EXPECT_EQ(rep.observed_minimizers, at);
        }
    }
    for (int n : {7, 8}) EXPECT_TRUE(verify_theorem1(build({Family::E, n}), 1).pass);
}

TEST(Theorem1, CapExceededNamesSize)
{
    const auto rs = build({Family::E, 8});
    try {
        verify_theorem1(rs, 6, 1000);
        FAIL() << "expected CapExceeded";
    } catch (const CapExceeded& e) {
        EXPECT_EQ(e.required(), simplex_size(8, 6));
        EXPECT_NE(std::string(e.what()).find("1716"), std::string::npos);
    }
}

TEST(Lemma1, MinimumHasSupportOne)
{
    for (LieType t : types_in_rank_range(1, 5))
        for (int h = 1; h <= 4; ++h) {
            const auto [m, at] = brute_min(build(t), h);
            bool support_one = false;
            for (const auto& w : at)
                support_one |= std::count(w.coeffs().begin(), w.coeffs().end(), 0) == t.rank - 1;
            EXPECT_TRUE(support_one) << to_string(t) << " t=" << h;
        }
}

TEST(FindInjection, FullMatchingExceptBnTop)
{
    for (LieType t : types_in_rank_range(1, 10)) {
        const auto rs = build(t);
        for (int j = 1; j <= t.rank; ++j) {
            const auto cert = find_injection(rs, j);
            const auto chk = verify_certificate(rs, cert);
            EXPECT_TRUE(chk.admissible()) << to_string(t) << " j=" << j;
            const bool fallback_expected = t.family == Family::B && j == t.rank;
            EXPECT_EQ(cert.fallback.has_value(), fallback_expected) << to_string(t) << " j=" << j;
        }
    }
}

TEST(FindInjection, TypeAPreservesRhoPairing)
{
    for (int n = 1; n <= 10; ++n) {
        const auto rs = build({Family::A, n});
        for (int j = 1; j <= n; ++j)
            for (const auto& p : find_injection(rs, j).mapping)
                EXPECT_EQ(rs.rho_pairings()[p.source], rs.rho_pairings()[p.target]) << "A" << n << " j=" << j;
    }
}

TEST(FindInjection, E8FullMatching)
{
    const auto rs = build({Family::E, 8});
    for (int j = 1; j <= 8; ++j) {
        const auto cert = find_injection(rs, j);
        EXPECT_FALSE(cert.fallback);
        EXPECT_TRUE(verify_certificate(rs, cert).admissible());
    }
}

TEST(FindInjection, B5TopNodeFallback)
{
    const auto rs = build({Family::B, 5});
    const auto cert = find_injection(rs, 5);
    ASSERT_TRUE(cert.fallback);
    EXPECT_EQ(cert.fallback->source, root_of(rs, {1, 1, 1, 1, 1}));
    EXPECT_TRUE(verify_certificate(rs, cert).admissible());
    for (int t = 0; t <= 100; ++t) EXPECT_TRUE(lemma33_holds(5, t));
}

TEST(FindInjection, B5PrintedFallbackTargetsValidate)
{
    // e1 charged against e1 and e1 + e5.
    const auto rs = build({Family::B, 5});
    const FallbackRecord f{root_of(rs, {1, 1, 1, 1, 1}), root_of(rs, {1, 1, 1, 1, 1}), root_of(rs, {1, 1, 1, 1, 2})};
    EXPECT_TRUE(fallback_inequality(rs, 1, 5, f));
    EXPECT_TRUE(fallback_inequality_at(rs, 1, 5, f, 10));
    const auto ref = reference_injection(rs, 5);
    ASSERT_TRUE(ref && ref->cert.fallback);
    EXPECT_EQ(*ref->cert.fallback, f);
    EXPECT_TRUE(verify_certificate(rs, ref->cert).admissible());
}

TEST(FindInjection, FullMatchingImpliesTermwiseFactorBound)
{
    for (LieType t : types_in_rank_range(1, 8)) {
        const auto rs = build(t);
        for (int j = 1; j <= t.rank; ++j) {
            const auto cert = find_injection(rs, j);
            for (const auto& p : cert.mapping)
                for (int h = 0; h <= 20; ++h)
                    EXPECT_LE(rs.rho_pairings()[p.source] + h * lambda_pairing(rs, cert.s, p.source),
                              rs.rho_pairings()[p.target] + h * lambda_pairing(rs, j, p.target));
        }
    }
}

TEST(VerifyCertificate, DetectsMutations)
{
    const auto rs = build({Family::C, 4});
    const auto good = find_injection(rs, 2);
    ASSERT_TRUE(verify_certificate(rs, good).admissible());

    auto dup = good;
    dup.mapping[1].target = dup.mapping[0].target;
    EXPECT_FALSE(verify_certificate(rs, dup).injective);

    auto dropped = good;
    dropped.mapping.pop_back();
    EXPECT_FALSE(verify_certificate(rs, dropped).covers_sources);

    auto outside = good;
    const auto rj = nilradical_indices(rs, 2);
    std::size_t k = 0;
    while (std::find(rj.begin(), rj.end(), k) != rj.end()) ++k;
    outside.mapping[0].target = k;
    const auto chk = verify_certificate(rs, outside);
    EXPECT_FALSE(chk.targets_in_rj);
    EXPECT_FALSE(chk.admissible());
    EXPECT_FALSE(chk.problems.empty());
}

TEST(Lemma2Numeric, Examples)
{
    const auto c4 = verify_lemma2_numeric(build({Family::C, 4}), 2, 10);
    EXPECT_TRUE(c4.pass);
    EXPECT_FALSE(c4.first_failure);

    const auto e6 = build({Family::E, 6});
    const auto r = verify_lemma2_numeric(e6, 4, 5);
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.strict);

    for (LieType t : types_in_rank_range(1, 8)) {
        const auto rs = build(t);
        const auto self = verify_lemma2_numeric(rs, min_fundamental(rs).s, 6);
        EXPECT_TRUE(self.pass);
        EXPECT_FALSE(self.strict);
    }
    EXPECT_THROW(verify_lemma2_numeric(e6, 7, 5), std::out_of_range);
    EXPECT_THROW(verify_lemma2_numeric(e6, 1, 0), std::invalid_argument);
}

TEST(Lemma33, Grid)
{
    for (int n = 3; n <= 20; ++n)
        for (int t = 0; t <= 100; ++t) EXPECT_TRUE(lemma33_holds(n, t)) << n << " " << t;
}

TEST(ReferenceInjection, CorrectedReadingsAdmissible)
{
    for (LieType t : types_in_rank_range(2, 10)) {
        if (t.family == Family::E || t.family == Family::F || t.family == Family::G) continue;
        const auto rs = build(t);
        for (int j = 1; j <= t.rank; ++j) {
            const auto ref = reference_injection(rs, j);
            if (!ref) continue;
            const bool d_top = t.family == Family::D && j == t.rank;
            EXPECT_EQ(verify_certificate(rs, ref->cert).admissible(), !d_top) << to_string(t) << " j=" << j;
        }
    }
}

TEST(ReferenceInjection, DnTopNodeIsNotInjective)
{
    for (int n = 4; n <= 10; ++n) {
        const auto rs = build({Family::D, n});
        const auto ref = reference_injection(rs, n);
        ASSERT_TRUE(ref);
        const auto chk = verify_certificate(rs, ref->cert);
        EXPECT_FALSE(chk.injective) << "D" << n;
        // The search still finds a certificate for this node.
        EXPECT_TRUE(verify_certificate(rs, find_injection(rs, n)).admissible());
    }
}

TEST(ReferenceInjection, PrintedReadingFailsSomewhere)
{
    int failures = 0;
    for (int n = 3; n <= 8; ++n)
        for (Family f : {Family::A, Family::B, Family::C}) {
            const auto rs = build({f, n});
            for (int j = 2; j <= n; ++j) {
                const auto ref = reference_injection(rs, j, InjectionReading::printed);
                if (ref && !verify_certificate(rs, ref->cert).admissible()) ++failures;
            }
        }
    EXPECT_GT(failures, 0);
}

TEST(ReferenceInjection, UnavailableTypes)
{
    EXPECT_FALSE(reference_injection(build({Family::E, 6}), 1));
    EXPECT_FALSE(reference_injection(build({Family::D, 5}), 4));
    EXPECT_THROW(reference_injection(build({Family::A, 3}), 4), std::out_of_range);
}

TEST(CertificateSerialization, JsonRoundTrip)
{
    for (LieType t : {LieType{Family::B, 5}, LieType{Family::E, 7}, LieType{Family::C, 3}}) {
        const auto rs = build(t);
        for (int j = 1; j <= t.rank; ++j) {
            const auto cert = find_injection(rs, j);
            const Json js = to_json(rs, cert);
            EXPECT_EQ(certificate_from_json(rs, Json::parse(js.dump())), cert);
            EXPECT_EQ(to_json(rs, certificate_from_json(rs, js)).dump(2), js.dump(2));
        }
    }
}

TEST(CertificateSerialization, TextForm)
{
    const auto rs = build({Family::B, 3});
    const auto cert = find_injection(rs, 3);
    const auto text = certificate_text(rs, cert);
    EXPECT_EQ(text.rfind("certificate B3 s=1 j=3\n", 0), 0u);
    EXPECT_NE(text.find("fallback "), std::string::npos);
    EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')), cert.mapping.size() + 2);
}
