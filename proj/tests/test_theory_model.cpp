#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace boxworld;

namespace {

// Exact LDLᵀ test: a symmetric matrix is PSD iff elimination meets only
// non-negative pivots, and a zero pivot has a zero row below it.
bool is_psd(RMatrix a) {
    const std::size_t n = a.rows();
    for (std::size_t p = 0; p < n; ++p) {
        if (a(p, p) < 0) return false;
        if (a(p, p) == 0) {
            for (std::size_t j = p; j < n; ++j)
                if (a(p, j) != 0) return false;
            continue;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            Rational f = a(i, p) / a(p, p);
            for (std::size_t j = p; j < n; ++j) a(i, j) -= f * a(p, j);
        }
    }
    return true;
}

RVector ones_sum(const SystemSpec& sys, const std::vector<int>& settings) {
    RVector sum(sys.dim());
    for_each_outcome(sys, settings, [&](const std::vector<int>& k) {
        sum = sum + product_effect_coeffs(sys, make_label(settings, k)).coeffs;
    });
    return sum;
}

}  // namespace

TEST(Site, DimensionsAndCounts) {
    EXPECT_EQ(SiteSpec({2, 2}).dim(), 3u);
    EXPECT_EQ(SiteSpec({2, 2, 2}).dim(), 4u);
    EXPECT_EQ(SiteSpec({3, 3}).dim(), 5u);
    EXPECT_EQ(SiteSpec({2}).dim(), 2u);
    EXPECT_EQ(SiteSpec({2, 4}).effect_count(), 6u);
    EXPECT_EQ(systems::gbits(2).dim(), 9u);
    EXPECT_EQ(systems::gbits(3).dim(), 27u);
}

TEST(Effects, LocalCoefficients) {
    SiteSpec gbit({2, 2});
    EXPECT_EQ(local_effect_coeffs(gbit, {0, 0}).coeffs, (RVector{1, 0, 0}));
    EXPECT_EQ(local_effect_coeffs(gbit, {0, 1}).coeffs, (RVector{-1, 0, 1}));
    EXPECT_EQ(local_effect_coeffs(gbit, {1, 1}).coeffs, (RVector{0, -1, 1}));
    EXPECT_EQ(local_effect_coeffs(SiteSpec({3}), {0, 2}).coeffs, (RVector{-1, -1, 1}));
    EXPECT_THROW(local_effect_coeffs(gbit, {2, 0}), Error);
    EXPECT_THROW(local_effect_coeffs(gbit, {0, 2}), Error);
}

TEST(Effects, ProductCoefficients) {
    const SystemSpec sys = systems::gbits(2);
    RVector v = product_effect_coeffs(sys, make_label({0, 0}, {0, 0})).coeffs;
    RVector expect(9);
    expect[0] = 1;
    EXPECT_EQ(v, expect);
    EXPECT_EQ(product_effect_coeffs(sys, make_label({0, 1}, {1, 0})).coeffs, tensor({-1, 0, 1}, {0, 1, 0}));
    EXPECT_EQ(identity_coeffs(sys).coeffs[8], 1);
}

TEST(Effects, EnumerationOrderAndCounts) {
    EXPECT_EQ(enumerate_extremal_effects(systems::gbits(1)).size(), 4u);
    EXPECT_EQ(enumerate_extremal_effects(systems::gbits(2)).size(), 16u);
    auto hybrid = enumerate_extremal_effects(systems::gbit_classical_bit());
    ASSERT_EQ(hybrid.size(), 8u);
    EXPECT_EQ(to_string(hybrid.front()), "X0(0)*X0(0)");
    EXPECT_TRUE(std::is_sorted(hybrid.begin(), hybrid.end()));
    EffectCatalog cat(systems::gbits(2));
    for (std::size_t i = 0; i < cat.size(); ++i) {
        EXPECT_EQ(cat.index_of(cat.label(i)), i);
        EXPECT_EQ(cat.find(cat.coeffs(i)), i);
    }
}

TEST(Effects, IdentityDecompositionOnFixedSystems) {
    for (const auto& sys : {systems::gbits(1), systems::gbits(2), systems::gbit_classical_bit(),
                            SystemSpec::from_outcomes({{2, 3}, {4}}), SystemSpec::from_outcomes({{3, 3}})}) {
        const RVector id = identity_coeffs(sys).coeffs;
        for_each_setting(sys, [&](const std::vector<int>& m) { EXPECT_EQ(ones_sum(sys, m), id) << sys.describe(); });
    }
}

TEST(Effects, SingleSiteIdentityDecomposition) {
    // Summing the outcomes of one site only, with the other factors fixed,
    // replaces that factor by the identity.
    const SystemSpec sys = SystemSpec::from_outcomes({{2, 3}, {2, 2}});
    for (int m = 0; m < 2; ++m) {
        RVector sum(sys.dim());
        for (int k = 0; k < sys.site(0).outcomes(m); ++k)
            sum = sum + tensor(local_effect_coeffs(sys.site(0), {m, k}).coeffs,
                               local_effect_coeffs(sys.site(1), {1, 0}).coeffs);
        EXPECT_EQ(sum, tensor(local_identity_coeffs(sys.site(0)).coeffs,
                              local_effect_coeffs(sys.site(1), {1, 0}).coeffs));
    }
}

TEST(Effects, ExtremalEffectsSpan) {
    for (int trial = 0; trial < 8; ++trial) {
        const SystemSpec sys = boxworld::testing::random_system(48);
        EffectCatalog cat(sys);
        std::vector<RVector> vs;
        for (const auto& e : cat.all_coeffs()) vs.push_back(e.coeffs);
        EXPECT_EQ(rank_of(vs, sys.dim()), sys.dim()) << sys.describe();
    }
}

TEST(Gram, LocalValues) {
    SiteSpec gbit({2, 2});
    EXPECT_EQ(gram_local(gbit, {0, 0}, {0, 0}), Rational(3, 4));
    EXPECT_EQ(gram_local(gbit, {0, 0}, {0, 1}), Rational(-1, 4));
    EXPECT_EQ(gram_local(gbit, {0, 0}, {1, 1}), Rational(1, 4));
    EXPECT_EQ(gram_local(SiteSpec({3, 3}), {1, 2}, {1, 2}), Rational(5, 9));
    EXPECT_THROW(gram_local(gbit, {0, 0}, {0, 5}), Error);
}

TEST(Gram, ProductValues) {
    const SystemSpec sys = systems::gbits(2);
    auto q = make_label({0, 0}, {0, 0});
    EXPECT_EQ(gram_product(sys, q, q), Rational(9, 16));
    EXPECT_EQ(gram_product(sys, q, make_label({0, 1}, {0, 0})), Rational(3, 16));
    EXPECT_EQ(abs(gram_product(sys, q, make_label({1, 1}, {1, 1}))), Rational(1, 16));
}

TEST(Gram, Hamming) {
    auto q = make_label({0, 0}, {0, 0});
    EXPECT_EQ(hamming(q, q), 0u);
    EXPECT_EQ(hamming(q, make_label({0, 1}, {0, 0})), 1u);
    EXPECT_EQ(hamming(q, make_label({1, 1}, {0, 1})), 2u);
    EXPECT_THROW(hamming(q, make_label({0}, {0})), Error);
}

TEST(Gram, HammingFormulaUpToThreeGbits) {
    for (std::size_t n = 1; n <= 3; ++n) {
        EffectCatalog cat(systems::gbits(n));
        for (std::size_t i = 0; i < cat.size(); ++i)
            for (std::size_t j = 0; j < cat.size(); ++j) {
                const auto d = hamming(cat.label(i), cat.label(j));
                Rational expect = 1;
                for (std::size_t s = 0; s < n; ++s) expect /= 4;
                for (std::size_t s = 0; s < n - d; ++s) expect *= 3;
                ASSERT_EQ(abs(gram_product(cat.system(), cat.label(i), cat.label(j))), expect);
            }
    }
}

TEST(Gram, ConsistentWithIdentityDecomposition) {
    for (const auto& outcomes : std::vector<std::vector<int>>{{2, 2}, {2, 2, 2}, {3, 3}, {2, 3, 4}, {2}, {5}}) {
        SiteSpec site(outcomes);
        Rational total = 0;
        for (const auto& b : local_labels(site)) {
            std::set<Rational> sums;
            for (int m = 0; m < site.measurements(); ++m) {
                Rational s = 0;
                for (int k = 0; k < site.outcomes(m); ++k) s += gram_local(site, {m, k}, b);
                sums.insert(s);
            }
            EXPECT_EQ(sums.size(), 1u);
            if (b.m == 0) total += *sums.begin();
        }
        EXPECT_EQ(total, 1);
    }
}

TEST(Gram, TableIsSymmetric) {
    for (const auto& outcomes : std::vector<std::vector<int>>{{2, 2}, {3, 3}, {2, 3, 4}}) {
        RMatrix g = gram_local_table(SiteSpec(outcomes));
        EXPECT_EQ(g, g.transpose());
    }
    RMatrix full = gram_matrix(EffectCatalog(systems::gbits(2)));
    EXPECT_EQ(full, full.transpose());
}

TEST(Gram, UniformKTablesArePsd) {
    for (const auto& outcomes : std::vector<std::vector<int>>{{2, 2}, {2, 2, 2}, {3, 3}, {4}}) {
        RMatrix g = gram_local_table(SiteSpec(outcomes));
        EXPECT_TRUE(is_psd(g));
        EXPECT_EQ(rank(g), SiteSpec(outcomes).dim());
    }
}

TEST(SimplexGram, Examples) {
    EXPECT_EQ(simplex_gram(1), RMatrix::from_rows({{1, -1}, {-1, 1}}, 2));
    EXPECT_EQ(simplex_gram(2)(0, 2), Rational(-1, 2));
    EXPECT_THROW(simplex_gram(0), Error);
}

TEST(SimplexGram, FrameConditions) {
    for (int n = 1; n <= 6; ++n) {
        RMatrix g = simplex_gram(n);
        EXPECT_TRUE(is_psd(g));
        EXPECT_EQ(rank(g), static_cast<std::size_t>(n));
        Rational trace = 0;
        for (std::size_t i = 0; i < g.rows(); ++i) {
            trace += g(i, i);
            Rational row = 0;
            for (std::size_t j = 0; j < g.cols(); ++j) row += g(i, j);
            EXPECT_EQ(row, 0);
        }
        EXPECT_EQ(trace, n + 1);
    }
}

TEST(SystemSpec, Predicates) {
    EXPECT_TRUE(systems::gbits(2).homogeneous());
    EXPECT_FALSE(systems::gbit_classical_bit().homogeneous());
    EXPECT_TRUE(systems::gbit_classical_bit().gram_invariant());
    EXPECT_FALSE(SystemSpec::from_outcomes({{2, 3}}).gram_invariant());
    EXPECT_EQ(systems::gbit_classical_bit().describe(), "[2,2] x [2]");
}
