#include <gtest/gtest.h>

#include <random>

#include "msp/core.hpp"
#include "msp/error.hpp"
#include "oracles.hpp"

using namespace msp;
using msp::testing::oracle_score;

TEST(Palette, RejectsZeroColors)
{
    EXPECT_THROW(Palette(0), InvalidInput);
    EXPECT_TRUE(Palette(3).contains(3));
    EXPECT_FALSE(Palette(3).contains(0));
    EXPECT_FALSE(Palette(3).contains(4));
}

TEST(Code, RejectsEmptyAndReservedColor)
{
    EXPECT_THROW(Code(std::vector<Color>{}), InvalidInput);
    EXPECT_THROW((Code{1, 0, 2}), InvalidInput);
    EXPECT_EQ((Code{1, 2, 3}).to_string(), "1 2 3");
    EXPECT_FALSE((Code{1, 4}).fits(Palette(3)));
}

TEST(Score, IdentityGivesAllBlack)
{
    const Palette p(6);
    EXPECT_EQ(score(Code{1, 2, 3, 4}, Code{1, 2, 3, 4}, p), (Score{4, 0}));
    EXPECT_EQ(naive_score(Code{1, 2, 3, 4}, Code{1, 2, 3, 4}, p), (Score{4, 0}));
}

TEST(Score, SameMultisetNoPositions)
{
    const Palette p(2);
    EXPECT_EQ(score(Code{1, 1, 2, 2}, Code{2, 2, 1, 1}, p), (Score{0, 4}));
    EXPECT_EQ(naive_score(Code{1, 1, 2, 2}, Code{2, 2, 1, 1}, p), (Score{0, 4}));
}

TEST(Score, MixedExampleMatchesOracle)
{
    // Position 1 agrees; colors 1, 2, 3 are shared: w = 3, so (1, 2).
    const Code x{1, 2, 3, 4};
    const Code y{1, 3, 2, 5};
    ASSERT_EQ(oracle_score(x, y), (Score{1, 2}));
    EXPECT_EQ(score(x, y, Palette(6)), (Score{1, 2}));
    EXPECT_EQ(naive_score(x, y, Palette(6)), (Score{1, 2}));
}

TEST(NaiveScore, SmallCases)
{
    EXPECT_EQ(naive_score(Code{2, 2}, Code{2, 2}, Palette(2)), (Score{2, 0}));
    ASSERT_EQ(oracle_score(Code{1, 2}, Code{2, 1}), (Score{0, 2}));
    EXPECT_EQ(naive_score(Code{1, 2}, Code{2, 1}, Palette(2)), (Score{0, 2}));
}

TEST(Score, Errors)
{
    EXPECT_THROW(score(Code{1, 2}, Code{1, 2, 3}, Palette(3)), InvalidInput);
    EXPECT_THROW(score(Code{1, 4}, Code{1, 2}, Palette(3)), InvalidInput);
    EXPECT_THROW(naive_score(Code{1, 2}, Code{1}, Palette(3)), InvalidInput);
    EXPECT_THROW(naive_score(Code{1, 2}, Code{1, 9}, Palette(3)), InvalidInput);
}

TEST(Rho1, Examples)
{
    EXPECT_EQ(rho1(Code{3, 1, 2}, Code{3, 1, 2}), 0u);
    EXPECT_EQ(rho1(Code{1, 2, 3, 4}, Code{1, 3, 2, 5}), 3u);
    EXPECT_EQ(rho1(Code{1, 1}, Code{2, 2}), 2u);
    EXPECT_THROW(rho1(Code{1}, Code{1, 1}), InvalidInput);
}

TEST(Rho2, Examples)
{
    const ColorMultiset x(Code{1, 2, 3, 4});
    EXPECT_EQ(rho2(x, x), 0u);
    EXPECT_EQ(rho2(x, ColorMultiset(Code{1, 3, 2, 5})), 1u);
    EXPECT_EQ(rho2(ColorMultiset(Code{1, 1}), ColorMultiset(Code{2, 2})), 2u);
    EXPECT_THROW(rho2(ColorMultiset(Code{1}), ColorMultiset(Code{1, 1})), InvalidInput);
}

TEST(ColorMultiset, OrderDoesNotMatter)
{
    EXPECT_EQ(ColorMultiset(Code{1, 3, 3, 1}), ColorMultiset(Code{3, 1, 1, 3}));
    EXPECT_EQ(ColorMultiset(Code{1, 3, 3, 1}).count(3), 2u);
    EXPECT_EQ(ColorMultiset(Code{1, 3, 3, 1}).total(), 4u);
}

TEST(ScoreProperty, SymmetryBoundsAndDecomposition)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10'000; ++i) {
        const Color kappa = 1 + rng() % 9;
        const std::size_t len = 1 + rng() % 9;
        const Code x = msp::testing::random_code(kappa, len, rng);
        const Code y = msp::testing::random_code(kappa, len, rng);
        const Palette p(kappa);
        const Score s = score(x, y, p);
        ASSERT_EQ(s, score(y, x, p));
        ASSERT_EQ(s, naive_score(x, y, p));
        ASSERT_LE(s.total(), len);
        const std::size_t r1 = rho1(x, y);
        const std::size_t r2 = rho2(ColorMultiset(x), ColorMultiset(y));
        ASSERT_EQ(s.black, len - r1);
        ASSERT_EQ(s.white, r1 - r2);
        ASSERT_EQ(s.total(), len - r2);
    }
}

// For k <= 3, l <= 4, no code scores (l - 1, 1) against any other.
TEST(ScoreProperty, AlmostPerfectWithOneWhiteIsImpossible)
{
    for (Color kappa = 1; kappa <= 3; ++kappa) {
        for (std::size_t len = 1; len <= 4; ++len) {
            const Palette p(kappa);
            const Score bad{static_cast<std::uint32_t>(len - 1), 1};
            msp::testing::for_each_code(kappa, len, [&](const std::vector<Color>& a) {
                msp::testing::for_each_code(kappa, len, [&](const std::vector<Color>& b) {
                    ASSERT_NE(score(Code(a), Code(b), p), bad);
                });
            });
        }
    }
}
