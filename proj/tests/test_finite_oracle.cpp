#include <gtest/gtest.h>

#include <random>

#include "bredon/bredon.hpp"
#include "bredon/finite_oracle.hpp"
#include "oracles.hpp"

using namespace bredon;

namespace {

AlphabetPtr xa() { return Alphabet::make({"x"}); }

FreeRingElement xpow(const AlphabetPtr& a, std::int64_t k) {
    return FreeRingElement(Word::generator(a, GeneratorId{0}, k));
}

} // namespace

TEST(Embed, Examples) {
    auto a = xa();
    const auto all_ones = embed(xpow(a, 0) + xpow(a, 1) + xpow(a, 2), 3);
    EXPECT_EQ(all_ones, IntMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
    EXPECT_EQ(embed(xpow(a, 1) - xpow(a, 0), 2), IntMatrix::from_rows({{-1, 1}, {1, -1}}));
    EXPECT_TRUE(embed(FreeRingElement(a), 4).is_zero());
    EXPECT_EQ(embed(xpow(a, -1), 5), embed(xpow(a, 4), 5));
    EXPECT_EQ(embed(xpow(a, 1), 5, 2), embed(xpow(a, 2), 5));
}

TEST(Embed, RejectsSeveralGenerators) {
    auto a = Alphabet::make({"x", "y"});
    try {
        embed(FreeRingElement::one(a), 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "oracle-single-generator");
    }
}

TEST(Embed, IsARingHomomorphism) {
    std::mt19937_64 rng(61);
    auto a = xa();
    auto random_element = [&] {
        FreeRingElement e(a);
        for (int i = 0; i < 4; ++i)
            e.add_term(Word::generator(a, GeneratorId{0}, static_cast<std::int64_t>(rng() % 13) - 6),
                       static_cast<long>(rng() % 9) - 4);
        return e;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 8);
        const auto p = random_element(), q = random_element();
        ASSERT_EQ(embed(p * q, n), embed(p, n) * embed(q, n));
        ASSERT_EQ(embed(p + q, n), [&] {
            IntMatrix s = embed(p, n);
            const IntMatrix t = embed(q, n);
            for (std::size_t i = 0; i < s.rows(); ++i)
                for (std::size_t j = 0; j < s.cols(); ++j)
                    s(i, j) += t(i, j);
            return s;
        }());
    }
}

TEST(CharacterCount, Examples) {
    EXPECT_EQ(character_count(1), 1);
    EXPECT_EQ(character_count(3), 3);
    EXPECT_EQ(character_count(6), 6);
}

TEST(CyclicResolution, ExactForSmallOrders) {
    for (std::int64_t n = 2; n <= 12; ++n)
        EXPECT_TRUE(verify_cyclic_resolution(n)) << n;
}

TEST(CyclicResolution, CorruptedThetaIsNotExact) {
    auto a = xa();
    for (std::int64_t n : {2, 3, 6}) {
        FreeRingElement theta = norm_element(a, n);
        theta.add_term(Word::generator(a, GeneratorId{0}, n - 1), -1);
        EXPECT_FALSE(relation_module_sequence(n, theta).exact()) << n;
        EXPECT_TRUE(relation_module_sequence(n, norm_element(a, n)).exact()) << n;
    }
}

TEST(CyclicResolution, RejectsTrivialOrder) { EXPECT_THROW(cyclic_resolution_report(1), Error); }

TEST(ChainHomology, CircleAndPoint) {
    // Circle: one 1-cell with zero boundary on one 0-cell.
    const auto h = chain_homology({IntMatrix(1, 1)}, 1);
    EXPECT_EQ(h[0], AbelianGroupInvariants::free(1));
    EXPECT_EQ(h[1], AbelianGroupInvariants::free(1));
    // RP^2 style: d2 = 2, d1 = 0.
    const auto rp = chain_homology({IntMatrix::from_rows({{2}}), IntMatrix(1, 1)}, 1);
    EXPECT_EQ(rp[1], (AbelianGroupInvariants{0, {2}}));
    EXPECT_EQ(rp[2], AbelianGroupInvariants::free(0));
}

TEST(BredonOracle, MatchesPipeline) {
    for (std::int64_t n = 2; n <= 12; ++n) {
        const auto h = bredon_homology_oracle(n);
        const auto b = bredon_full(parse_presentation("<x | x^" + std::to_string(n) + ">"));
        ASSERT_EQ(h.size(), 3u);
        EXPECT_EQ(h[0], b.h0) << n;
        EXPECT_EQ(h[1], b.h1) << n;
        EXPECT_EQ(h[2], *b.h2) << n;
    }
}
