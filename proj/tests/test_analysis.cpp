#include "trifold/analysis.hpp"
#include "trifold/folding.hpp"
#include "trifold/spectral.hpp"
#include "trifold/unfold_sim.hpp"

#include <gtest/gtest.h>

using namespace trifold;

TEST(StarClass, MinimalRotation) {
    using enum Color;
    EXPECT_EQ(star_class({red, red, blue, blue, blue, blue}), "BBBBRR");
    EXPECT_EQ(star_class({blue, red, red, red, red, blue}), "BBRRRR");
    EXPECT_EQ(star_class({red, blue, red, blue, red, blue}), "BRBRBR");
    EXPECT_TRUE(is_allowed_star("BBBBRR"));
    EXPECT_FALSE(is_allowed_star("BRBRBR"));
    EXPECT_FALSE(is_allowed_star("BBBRRR"));
}

TEST(VertexStars, AllUpSide32) {
    const auto hist = vertex_star_histogram(patch(FoldingSequence::parse("(+)*"), 5));
    ASSERT_FALSE(hist.empty());
    for (const auto& [cls, n] : hist) EXPECT_TRUE(is_allowed_star(cls)) << cls;
}

TEST(VertexStars, UniformWordsUpToFive) {
    for (int n = 1; n <= 5; ++n)
        for (unsigned bits = 0; bits < (1u << n); ++bits) {
            FoldWord w;
            for (int i = 0; i < n; ++i) w.push_back((bits >> i) & 1 ? FoldDirection::down : FoldDirection::up);
            EXPECT_TRUE(star_violations(patch(FoldingSequence::finite(w), n)).empty()) << to_string(w);
        }
}

TEST(VertexStars, SomeMixedWordOfLengthTwoViolates) {
    EXPECT_FALSE(star_violations(unfold_pattern(parse_mixed("-++,+++"))).empty());
}

TEST(VertexStars, EmptyPatch) { EXPECT_TRUE(vertex_star_histogram(PatternPatch{}).empty()); }

TEST(Densities, MatchExactVectorsOnSide4nPatches) {
    for (int n = 1; n <= 4; ++n) {
        const auto d = empirical_densities(patch(FoldingSequence::parse("(+)*"), 2 * n));
        EXPECT_EQ(d.total, static_cast<std::size_t>(pow_int(16, n)));
        const auto v = prefix_density(parse_word("+"), 2 * n, 1);
        for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(d.frequency[i], v[i]);
    }
}

TEST(Densities, DeviationShrinksByFourPerLevel) {
    Rational prev = 0;
    for (int n = 1; n <= 5; ++n) {
        const auto d = empirical_densities(patch(FoldingSequence::parse("(+)*"), 2 * n));
        Rational dev = 0;
        for (const auto& f : d.frequency) {
            Rational x = f - Rational(1, 8);
            if (x < 0) x = -x;
            if (x > dev) dev = x;
        }
        if (n > 1) EXPECT_LE(dev * 4, prev * Rational(5, 4)) << n;
        prev = dev;
    }
}

TEST(Densities, DecoratedTypesSplitEvenly) {
    const auto d = empirical_densities(patch(FoldingSequence::parse("(+)*"), 8));
    EXPECT_EQ(d.decorated.size(), 16u);
    for (const auto& [t, n] : d.decorated) {
        if (!t.decoration) continue;
        const auto cls = static_cast<std::size_t>(index(type_class(t.orientation, t.red_count)) - 1);
        EXPECT_EQ(n * 3, d.counts[cls]);
        const Rational f = d.decorated_frequency(t) - Rational(1, 24);
        EXPECT_LT(f < 0 ? -f : f, Rational(1, 200));
    }
}

TEST(Densities, SingleTile) {
    const auto d = empirical_densities(patch(FoldingSequence::parse("(+)*"), 0));
    EXPECT_EQ(d.total, 1u);
    EXPECT_EQ(d.frequency[0], 1);
    EXPECT_EQ(empirical_densities(PatternPatch{}).total, 0u);
}

TEST(PeriodCheck, AllUpRadius64HasNoPeriods) {
    const auto p = ball_patch(FoldingSequence::parse("(+)*"), 64);
    EXPECT_TRUE(period_check(p, 8).empty());
}

TEST(PeriodCheck, LayerOneIsPeriodic) {
    const auto p = ball_patch(FoldingSequence::parse("(+)*"), 32);
    const auto periods = period_check(p, 2, 1);
    ASSERT_FALSE(periods.empty());
    for (const auto& t : periods) {
        EXPECT_EQ(t.norm_squared(), 4);
        EXPECT_FALSE(t.p == 0 && t.q == 0);
    }
}

TEST(PeriodCheck, WindowTooSmall) {
    EXPECT_THROW(period_check(ball_patch(FoldingSequence::parse("(+)*"), 10), 8), WindowTooSmall);
}

TEST(PeriodCheck, TranslationsExcludeZero) {
    for (const auto& t : translations_up_to(3)) {
        EXPECT_FALSE(t.p == 0 && t.q == 0);
        EXPECT_LE(t.norm_squared(), 9);
    }
    EXPECT_EQ(translations_up_to(1).size(), 6u);
}

TEST(LayerBlocks, AllUp) {
    EXPECT_TRUE(layer_block_check(ball_patch(FoldingSequence::parse("(+)*"), 32), 1));
    EXPECT_TRUE(layer_block_check(ball_patch(FoldingSequence::parse("(+)*"), 64), 3));
    EXPECT_THROW(layer_block_check(ball_patch(FoldingSequence::parse("(+)*"), 8), 3), WindowTooSmall);
}

TEST(LayerBlocks, CorruptionIsDetected) {
    auto p = ball_patch(FoldingSequence::parse("(+)*"), 32);
    const SegmentId s{1, 3, 1};
    ASSERT_EQ(layer_of(s), 2);
    p.interior[s] = swapped(p.interior.at(s));
    EXPECT_FALSE(layer_block_check(p, 2));
}
