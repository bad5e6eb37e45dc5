#include <gtest/gtest.h>

#include <random>

#include "bredon/presentation.hpp"
#include "oracles.hpp"

using namespace bredon;

namespace {

AlphabetPtr xyz() { return Alphabet::make({"x", "y", "z"}); }

Word w(const AlphabetPtr& a, std::string_view text) { return parse_word(a, text); }

} // namespace

TEST(Alphabet, RejectsBadNames) {
    EXPECT_THROW(Alphabet::make({"x", "x"}), Error);
    EXPECT_THROW(Alphabet::make({"1x"}), Error);
    EXPECT_THROW(Alphabet::make({""}), Error);
    auto a = Alphabet::make({"a_1", "B2"});
    EXPECT_EQ(a->at("B2").index, 1u);
    EXPECT_FALSE(a->find("c").has_value());
    try {
        a->at("c");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "unknown-generator");
        EXPECT_EQ(e.kind(), ErrorKind::Usage);
    }
}

TEST(Word, MultiplyExamples) {
    auto a = xyz();
    EXPECT_TRUE((w(a, "x") * w(a, "x^-1")).is_identity());
    EXPECT_EQ(w(a, "x y") * w(a, "y^-1 z"), w(a, "x z"));
    EXPECT_EQ(w(a, "x y x^-1") * w(a, "x y^-1"), w(a, "x"));
}

TEST(Word, MultiplyRejectsForeignAlphabet) {
    auto a = xyz();
    auto b = Alphabet::make({"p"});
    try {
        (void)(w(a, "x") * Word::generator(b, GeneratorId{0}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "alphabet-mismatch");
    }
}

TEST(Word, InvertExamples) {
    auto a = xyz();
    EXPECT_EQ(invert(w(a, "x y z^-1")), w(a, "z y^-1 x^-1"));
    EXPECT_TRUE(invert(Word(a)).is_identity());
}

TEST(Word, ToStringFoldsRuns) {
    auto a = xyz();
    EXPECT_EQ(w(a, "x x y^-1").to_string(), "x^2*y^-1");
    EXPECT_EQ(Word(a).to_string(), "1");
    EXPECT_EQ(w(a, "x y x^-1").to_string(), "x*y*x^-1");
}

TEST(Word, CyclicReduceExamples) {
    auto a = xyz();
    auto d = cyclic_reduce(w(a, "x y x^-1"));
    EXPECT_EQ(d.conjugator, w(a, "x"));
    EXPECT_EQ(d.core, w(a, "y"));
    d = cyclic_reduce(w(a, "x y"));
    EXPECT_TRUE(d.conjugator.is_identity());
    EXPECT_EQ(d.core, w(a, "x y"));
    d = cyclic_reduce(w(a, "x y z y^-1 x^-1"));
    EXPECT_EQ(d.conjugator, w(a, "x y"));
    EXPECT_EQ(d.core, w(a, "z"));
}

TEST(Word, RootExamples) {
    auto a = xyz();
    auto r = root(w(a, "(x y)^3"));
    EXPECT_EQ(r.root, w(a, "x y"));
    EXPECT_EQ(r.log, 3u);
    r = root(w(a, "x"));
    EXPECT_EQ(r.root, w(a, "x"));
    EXPECT_EQ(r.log, 1u);
    r = root(w(a, "y x x y^-1"));
    EXPECT_EQ(r.root, w(a, "y x y^-1"));
    EXPECT_EQ(r.log, 2u);
    const auto [brute, k] = oracle::enumerate_root(w(a, "y x x y^-1"));
    EXPECT_EQ(brute, r.root);
    EXPECT_EQ(k, 2u);
}

TEST(Word, RootOfIdentityIsDomainError) {
    try {
        root(Word(xyz()));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "root-of-identity");
        EXPECT_EQ(e.kind(), ErrorKind::Domain);
    }
}

TEST(Word, ExponentSumExamples) {
    auto a = xyz();
    EXPECT_EQ(exponent_sum(w(a, "x y x^-1 y^-1"), GeneratorId{0}), 0);
    EXPECT_EQ(exponent_sum(w(a, "x^3 y^-2"), GeneratorId{1}), -2);
}

TEST(Word, InvolvesExamples) {
    auto a = xyz();
    const GeneratorId y[] = {GeneratorId{1}};
    EXPECT_TRUE(involves(w(a, "x y x^-1"), y));
    EXPECT_FALSE(involves(w(a, "x z x^-1 z^-1"), y));
    EXPECT_FALSE(involves(w(a, "y y^-1 x"), y));
}

TEST(Word, Conjugacy) {
    auto a = xyz();
    EXPECT_TRUE(are_conjugate(w(a, "x y"), w(a, "y x")));
    EXPECT_TRUE(are_conjugate(w(a, "z x y z^-1"), w(a, "y x")));
    EXPECT_FALSE(are_conjugate(w(a, "x y"), w(a, "x y^-1")));
    EXPECT_TRUE(are_conjugate(Word(a), Word(a)));
}

TEST(WordProperty, ReductionMatchesNaiveReducer) {
    std::mt19937_64 rng(11);
    auto a = xyz();
    for (int trial = 0; trial < 500; ++trial) {
        const auto raw = oracle::random_letters(rng, 3, 40);
        const Word word(a, raw);
        const auto naive = oracle::naive_reduce(raw);
        ASSERT_EQ(std::vector<Letter>(word.letters().begin(), word.letters().end()), naive);
    }
}

TEST(WordProperty, GroupLaws) {
    std::mt19937_64 rng(12);
    auto a = xyz();
    for (int trial = 0; trial < 300; ++trial) {
        const Word p = oracle::random_word(rng, a, 20);
        const Word q = oracle::random_word(rng, a, 20);
        const Word s = oracle::random_word(rng, a, 20);
        ASSERT_EQ((p * q) * s, p * (q * s));
        ASSERT_TRUE((p * invert(p)).is_identity());
        ASSERT_EQ(invert(p * q), invert(q) * invert(p));
        ASSERT_EQ(power(p, 3), p * p * p);
        ASSERT_EQ(power(p, -2), invert(p * p));
    }
}

TEST(WordProperty, RootMatchesDivisorSearch) {
    std::mt19937_64 rng(13);
    auto a = Alphabet::make({"x", "y"});
    for (int trial = 0; trial < 400; ++trial) {
        Word base = oracle::random_word(rng, a, 6);
        if (base.is_identity())
            continue;
        const Word word = power(base, 1 + static_cast<std::int64_t>(rng() % 4));
        const RootResult r = root(word);
        const auto [expected_root, expected_log] = oracle::divisor_root(word);
        ASSERT_EQ(r.log, expected_log) << word.to_string();
        ASSERT_EQ(r.root, Word(a, expected_root)) << word.to_string();
        ASSERT_EQ(power(r.root, static_cast<std::int64_t>(r.log)), word);
    }
}

TEST(WordProperty, RootMatchesExhaustiveSearchOnShortWords) {
    std::mt19937_64 rng(14);
    auto a = Alphabet::make({"x", "y"});
    for (int trial = 0; trial < 60; ++trial) {
        const Word word = oracle::random_word(rng, a, 6);
        if (word.is_identity())
            continue;
        const auto [s, k] = oracle::enumerate_root(word);
        const RootResult r = root(word);
        ASSERT_EQ(r.log, k) << word.to_string();
        if (k > 1) {
            ASSERT_EQ(r.root, s) << word.to_string();
        }
    }
}

TEST(WordProperty, CyclicReduceRecomposes) {
    std::mt19937_64 rng(15);
    auto a = xyz();
    for (int trial = 0; trial < 300; ++trial) {
        const Word word = oracle::random_word(rng, a, 30);
        const auto d = cyclic_reduce(word);
        ASSERT_TRUE(is_cyclically_reduced(d.core));
        ASSERT_EQ(d.conjugator * d.core * invert(d.conjugator), word);
    }
}
