#include <gtest/gtest.h>

#include <random>

#include "bredon/int_linalg.hpp"
#include "oracles.hpp"

using namespace bredon;

TEST(Smith, DiagonalExample) {
    const auto s = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
    EXPECT_EQ(s.D, IntMatrix::from_rows({{1, 0}, {0, 6}}));
    EXPECT_EQ(s.U * IntMatrix::from_rows({{2, 0}, {0, 3}}) * s.V, s.D);
}

TEST(Smith, ZeroRow) {
    const auto m = IntMatrix::from_rows({{0, 0, 0, 0}});
    const auto s = smith_normal_form(m);
    EXPECT_TRUE(s.D.is_zero());
    EXPECT_EQ(s.D.rows(), 1u);
    EXPECT_EQ(s.D.cols(), 4u);
}

TEST(Smith, EmptyMatrix) {
    const IntMatrix m(0, 3);
    const auto s = smith_normal_form(m);
    EXPECT_EQ(s.V, IntMatrix::identity(3));
    EXPECT_EQ(cokernel_invariants(m), AbelianGroupInvariants::free(3));
}

TEST(Smith, ShapeError) {
    try {
        IntMatrix(2, 2, {1, 2, 3});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "matrix-shape");
    }
}

TEST(Cokernel, Examples) {
    EXPECT_EQ(cokernel_invariants(IntMatrix::from_rows({{2, 2}})), (AbelianGroupInvariants{1, {2}}));
    EXPECT_EQ(cokernel_invariants(IntMatrix::from_rows({{0, 0}})), AbelianGroupInvariants::free(2));
    EXPECT_EQ(cokernel_invariants(IntMatrix::from_rows({{3}})), (AbelianGroupInvariants{0, {3}}));
}

TEST(KernelRank, Examples) {
    EXPECT_EQ(kernel_rank(IntMatrix::from_rows({{0, 0, 0, 0}})), 1u);
    EXPECT_EQ(kernel_rank(IntMatrix::from_rows({{3}})), 0u);
    EXPECT_EQ(kernel_rank(IntMatrix::from_rows({{0, 0, 0, 0}, {0, 0, 1, 0}})), 1u);
}

TEST(Invariants, TextForm) {
    EXPECT_EQ((AbelianGroupInvariants{3, {2}}).to_string(), "Z^3 + Z/2");
    EXPECT_EQ(AbelianGroupInvariants{}.to_string(), "0");
    EXPECT_EQ(AbelianGroupInvariants::free(1).to_string(), "Z");
    EXPECT_EQ((AbelianGroupInvariants{0, {2, 6}}).to_string(), "Z/2 + Z/6");
}

TEST(Invariants, DirectSumRenormalizes) {
    const AbelianGroupInvariants a{0, {2}}, b{0, {3}};
    EXPECT_EQ(direct_sum(a, b), (AbelianGroupInvariants{0, {6}}));
    EXPECT_EQ(direct_sum(AbelianGroupInvariants::free(2), AbelianGroupInvariants{0, {4, 2}}),
              (AbelianGroupInvariants{2, {2, 4}}));
    EXPECT_EQ(from_cyclic_orders({Integer(1), Integer(4), Integer(2)}), (AbelianGroupInvariants{0, {2, 4}}));
}

TEST(SmithProperty, RandomMatricesAgainstOracles) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const IntMatrix m = oracle::random_matrix(rng, 5, 9);
        const auto s = smith_normal_form(m);
        ASSERT_EQ(s.U * m * s.V, s.D);
        ASSERT_EQ(abs(oracle::determinant(s.U)), 1);
        ASSERT_EQ(abs(oracle::determinant(s.V)), 1);
        const auto expected = oracle::minor_gcd_factors(m);
        for (std::size_t i = 0; i < expected.size(); ++i)
            ASSERT_EQ(s.D(i, i), expected[i]);
        for (std::size_t i = 0; i < s.D.rows(); ++i)
            for (std::size_t j = 0; j < s.D.cols(); ++j)
                if (i != j) {
                    ASSERT_EQ(s.D(i, j), 0);
                }
        ASSERT_EQ(rank(m), oracle::elimination_rank(m));
    }
}

TEST(SmithProperty, LargeEntriesStayExact) {
    // Entries beyond 64 bits; compares against the minor oracle.
    IntMatrix m(2, 2);
    m(0, 0) = Integer("123456789012345678901234567890");
    m(0, 1) = Integer("987654321098765432109876543210");
    m(1, 0) = 6;
    m(1, 1) = 10;
    const auto s = smith_normal_form(m);
    EXPECT_EQ(s.U * m * s.V, s.D);
    const auto expected = oracle::minor_gcd_factors(m);
    EXPECT_EQ(s.D(0, 0), expected[0]);
    EXPECT_EQ(s.D(1, 1), expected[1]);
}
