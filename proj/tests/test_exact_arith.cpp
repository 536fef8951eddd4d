#include "support.hpp"

#include <gtest/gtest.h>

using namespace boxworld;
using boxworld::testing::random_matrix;
using boxworld::testing::random_vector;

TEST(Rational, ParsesToCanonicalForm) {
    EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
    EXPECT_EQ(to_string(parse_rational("-6/-4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("4/-2")), "-2");
    EXPECT_EQ(to_string(parse_rational("0/7")), "0");
    EXPECT_EQ(parse_rational("123456789012345678901234567890/3"), Rational(Integer("41152263004115226300411522630")));
}

TEST(Rational, RejectsMalformedText) {
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
    EXPECT_THROW(parse_rational("1/2/3"), ParseError);
    EXPECT_THROW(parse_rational("0.5"), ParseError);
    EXPECT_THROW(parse_rational(" 12"), ParseError);
}

TEST(Rational, StringRoundTrip) {
    for (int i = 0; i < 200; ++i) {
        Rational r = boxworld::testing::small_rational() / boxworld::testing::uniform_int(1, 50);
        EXPECT_EQ(parse_rational(to_string(r)), r);
    }
}

TEST(Solve, UniqueSolution) {
    RMatrix a = RMatrix::from_rows({{1, 2}, {3, 4}}, 2);
    auto r = solve_exact(a, {5, 6});
    ASSERT_EQ(r.kind, SolveResult::Kind::unique);
    EXPECT_EQ(r.solution, (RVector{-4, Rational(9, 2)}));
}

TEST(Solve, InconsistentCarriesCertificate) {
    RMatrix a = RMatrix::from_rows({{1, 1}, {2, 2}}, 2);
    RVector b{1, 3};
    auto r = solve_exact(a, b);
    ASSERT_EQ(r.kind, SolveResult::Kind::inconsistent);
    ASSERT_EQ(r.certificate.size(), 2u);
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(dot(r.certificate, a.column(j)), 0);
    EXPECT_NE(dot(r.certificate, b), 0);
}

TEST(Solve, UnderdeterminedReturnsKernel) {
    RMatrix a = RMatrix::from_rows({{1, 1, 0}}, 3);
    auto r = solve_exact(a, {2});
    ASSERT_EQ(r.kind, SolveResult::Kind::underdetermined);
    EXPECT_EQ(r.kernel.size(), 2u);
    EXPECT_EQ(a * r.solution, RVector{2});
    for (const auto& k : r.kernel) EXPECT_TRUE(is_zero(a * k));
}

TEST(Solve, DimensionMismatchThrows) {
    EXPECT_THROW(solve_exact(RMatrix::identity(2), {1, 2, 3}), DimensionError);
}

TEST(Solve, RandomSystemsSatisfyTheirCertificates) {
    for (int trial = 0; trial < 60; ++trial) {
        const auto rows = static_cast<std::size_t>(boxworld::testing::uniform_int(1, 5));
        const auto cols = static_cast<std::size_t>(boxworld::testing::uniform_int(1, 5));
        RMatrix a = random_matrix(rows, cols);
        if (trial % 3 == 0 && rows > 1)
            for (std::size_t j = 0; j < cols; ++j) a(rows - 1, j) = a(0, j) * 2;
        RVector b = random_vector(rows);
        auto r = solve_exact(a, b);
        if (r.kind == SolveResult::Kind::inconsistent) {
            for (std::size_t j = 0; j < cols; ++j) EXPECT_EQ(dot(r.certificate, a.column(j)), 0);
            EXPECT_NE(dot(r.certificate, b), 0);
        } else {
            EXPECT_EQ(a * r.solution, b);
            EXPECT_EQ(r.kernel.size(), cols - rank(a));
            for (const auto& k : r.kernel) EXPECT_TRUE(is_zero(a * k));
        }
    }
}

TEST(Invert, ProductIsIdentity) {
    for (int trial = 0; trial < 30; ++trial) {
        const auto n = static_cast<std::size_t>(boxworld::testing::uniform_int(1, 6));
        RMatrix a = random_matrix(n, n);
        auto inv = try_invert(a);
        if (!inv) {
            EXPECT_LT(rank(a), n);
            continue;
        }
        EXPECT_EQ(a * *inv, RMatrix::identity(n));
        EXPECT_EQ(*inv * a, RMatrix::identity(n));
    }
}

TEST(Invert, SingularReportsRank) {
    RMatrix a = RMatrix::from_rows({{1, 2}, {2, 4}}, 2);
    try {
        invert(a);
        FAIL() << "expected SingularMatrixError";
    } catch (const SingularMatrixError& e) {
        EXPECT_EQ(e.rank(), 1u);
    }
}

TEST(Rank, OfVectorFamilies) {
    EXPECT_EQ(rank_of({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, 3), 2u);
    EXPECT_EQ(rank_of({}, 3), 0u);
    EXPECT_EQ(rank(RMatrix::identity(4)), 4u);
}

TEST(Tensor, KroneckerLayout) {
    EXPECT_EQ(tensor({1, 2}, {3, 4, 5}), (RVector{3, 4, 5, 6, 8, 10}));
}

TEST(Tensor, MapActsFactorwise) {
    for (int trial = 0; trial < 25; ++trial) {
        const auto m = static_cast<std::size_t>(boxworld::testing::uniform_int(1, 4));
        const auto n = static_cast<std::size_t>(boxworld::testing::uniform_int(1, 4));
        RMatrix a = random_matrix(m, m), b = random_matrix(n, n);
        RVector u = random_vector(m), v = random_vector(n);
        EXPECT_EQ(tensor_map(a, b) * tensor(u, v), tensor(a * u, b * v));
    }
}

TEST(Tensor, MapRespectsComposition) {
    RMatrix a = random_matrix(2, 2), b = random_matrix(3, 3), c = random_matrix(2, 2), d = random_matrix(3, 3);
    EXPECT_EQ(tensor_map(a, b) * tensor_map(c, d), tensor_map(a * c, b * d));
}

TEST(Matrix, TransposeAndKeys) {
    RMatrix a = RMatrix::from_rows({{1, 2, 3}, {4, 5, 6}}, 3);
    EXPECT_EQ(a.transpose().transpose(), a);
    EXPECT_EQ(a.transpose()(2, 1), 6);
    EXPECT_EQ(canonical_key(a), canonical_key(RMatrix::from_rows({{Rational(2, 2), Rational(6, 3), 3}, {4, 5, Rational(12, 2)}}, 3)));
    EXPECT_NE(canonical_key(a), canonical_key(a.transpose()));
}
