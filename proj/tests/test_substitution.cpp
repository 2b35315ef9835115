#include "trifold/folding.hpp"
#include "trifold/substitution.hpp"
#include "trifold/unfold_sim.hpp"

#include <gtest/gtest.h>

using namespace trifold;

namespace {

const CountMatrix kMPlus{{{0, 0, 0, 0, 1, 1, 1, 1},
                          {0, 0, 1, 3, 0, 0, 0, 0},
                          {0, 2, 2, 0, 0, 0, 0, 0},
                          {3, 1, 0, 0, 0, 0, 0, 0},
                          {1, 1, 1, 1, 0, 0, 0, 0},
                          {0, 0, 0, 0, 0, 0, 1, 3},
                          {0, 0, 0, 0, 0, 2, 2, 0},
                          {0, 0, 0, 0, 3, 1, 0, 0}}};

const CountMatrix kMMinus{{{0, 0, 1, 3, 0, 0, 0, 0},
                           {0, 2, 2, 0, 0, 0, 0, 0},
                           {3, 1, 0, 0, 0, 0, 0, 0},
                           {0, 0, 0, 0, 1, 1, 1, 1},
                           {0, 0, 0, 0, 0, 0, 1, 3},
                           {0, 0, 0, 0, 0, 2, 2, 0},
                           {0, 0, 0, 0, 3, 1, 0, 0},
                           {1, 1, 1, 1, 0, 0, 0, 0}}};

std::array<Int, 8> column(const CountMatrix& m, std::size_t j) {
    std::array<Int, 8> c{};
    for (std::size_t i = 0; i < 8; ++i) c[i] = m[i][j];
    return c;
}

const TriangleColoring kRRR{Orientation::positive, {Color::red, Color::red, Color::red}};

FoldWord word_from_bits(unsigned bits, int n) {
    FoldWord w;
    for (int i = 0; i < n; ++i) w.push_back((bits >> i) & 1 ? FoldDirection::down : FoldDirection::up);
    return w;
}

} // namespace

TEST(TypeClass, IndexingAndRotationInvariance) {
    EXPECT_EQ(type_class(Orientation::positive, 3), TypeClass::p_rrr);
    EXPECT_EQ(type_class(Orientation::positive, 0), TypeClass::p_bbb);
    EXPECT_EQ(type_class(Orientation::negative, 0), TypeClass::n_bbb);
    EXPECT_EQ(type_class(Orientation::negative, 3), TypeClass::n_rrr);
    EXPECT_STREQ(name(TypeClass::n_rbb), "N-RBB");
    for (int i = 1; i <= 8; ++i) {
        const auto c = representative(static_cast<TypeClass>(i));
        EXPECT_EQ(index(type_class(c)), i);
        EXPECT_EQ(type_class(c.rotated()), type_class(c));
    }
}

TEST(ApplyRuleTile, ImageCounts) {
    EXPECT_EQ(image_counts(SubRule::plus, kRRR), (std::array<Int, 8>{0, 0, 0, 3, 1, 0, 0, 0}));
    EXPECT_EQ(image_counts(SubRule::minus, kRRR), (std::array<Int, 8>{0, 0, 3, 0, 0, 0, 0, 1}));
    EXPECT_EQ(image_counts(SubRule::plus, representative(TypeClass::n_bbb)),
              (std::array<Int, 8>{1, 0, 0, 0, 0, 0, 0, 3}));
    EXPECT_EQ(image_counts(SubRule::plus, representative(TypeClass::p_rrb)),
              (std::array<Int, 8>{0, 0, 2, 1, 1, 0, 0, 0}));
}

TEST(ApplyRuleTile, GeometryOfTheImage) {
    for (Orientation o : {Orientation::positive, Orientation::negative}) {
        const PlacedTile t{unit_triangle(o, 2, -1), {Color::red, Color::blue, Color::blue}};
        const TriangleId big = inflate(t.triangle);
        EXPECT_EQ(big.orientation(), o);
        EXPECT_EQ(big.side(), 2);
        const auto img = apply_rule_tile(SubRule::plus, t);
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_EQ(img[i].triangle.orientation(), o);
            EXPECT_TRUE(contains(big, img[i].triangle));
        }
        EXPECT_EQ(img[3].triangle.orientation(), flipped(o));
        EXPECT_EQ(img[3].colors[0], medial_color(SubRule::plus, flipped(o)));
    }
}

TEST(SubstitutionMatrix, PinnedToPrintedMatrices) {
    EXPECT_EQ(substitution_matrix(SubRule::plus), kMPlus);
    EXPECT_EQ(substitution_matrix(SubRule::minus), kMMinus);
    for (SubRule r : {SubRule::plus, SubRule::minus})
        for (int j = 1; j <= 8; ++j)
            EXPECT_EQ(image_counts(r, representative(static_cast<TypeClass>(j))),
                      column(substitution_matrix(r), static_cast<std::size_t>(j - 1)));
}

TEST(SubstitutionMatrix, SquareIsPositiveAfterTwoSteps) {
    const CountMatrix mp = substitution_matrix(parse_word("++"));
    EXPECT_EQ(mp, multiply(kMPlus, kMPlus));
    const CountMatrix mp2 = multiply(mp, mp);
    for (const auto& row : mp2)
        for (Int x : row) EXPECT_GT(x, 0);
    for (std::size_t j = 0; j < 8; ++j) {
        Int sum = 0;
        for (std::size_t i = 0; i < 8; ++i) sum += mp[i][j];
        EXPECT_EQ(sum, 16);
    }
}

TEST(ApplyRulePatch, SingleStepSwapsOuterColors) {
    const auto seed = seed_patch({kT0, kRRR.colors});
    const auto once = apply_rule_patch(SubRule::plus, seed);
    for (const auto& [s, c] : once.boundary) EXPECT_EQ(c, Color::blue);
    const auto twice = apply_rule_patch(SubRule::plus, once);
    for (const auto& [s, c] : twice.boundary) EXPECT_EQ(c, Color::red);
}

TEST(ApplyRulePatch, NeedsColoredTriangle) {
    PatternPatch p;
    p.region = TriangleRegion{kT0};
    EXPECT_THROW(apply_rule_patch(SubRule::plus, p), Error);
}

TEST(Compose, AllUpFourTimesEqualsPatch) {
    const auto c = compose({SubRule::plus}, 4, kRRR);
    EXPECT_TRUE(interior_equal(c, patch(FoldingSequence::parse("(+)*"), 4)));
}

TEST(Compose, PlusMinusTwiceEqualsPeriodicPatch) {
    const auto c = compose({SubRule::plus, SubRule::minus}, 2, kRRR);
    EXPECT_TRUE(interior_equal(c, patch(FoldingSequence::parse("(+-)*"), 4)));
}

TEST(Compose, ZeroRepetitionsIsTheSeed) {
    const auto c = compose({SubRule::plus}, 0, kRRR);
    EXPECT_TRUE(c.interior.empty());
    EXPECT_EQ(c.boundary.size(), 3u);
    EXPECT_THROW(compose({SubRule::plus}, 1, kRRR), OrientationMismatch);
}

TEST(Compose, SeedColorDependsOnFirstLetter) {
    // All-blue positive seed for words starting with -.
    const TriangleColoring bbb{Orientation::positive, {Color::blue, Color::blue, Color::blue}};
    const auto c = compose({SubRule::minus, SubRule::plus}, 2, bbb);
    const auto ref = patch(FoldingSequence::parse("(-+)*"), 4);
    EXPECT_TRUE(interior_equal(c, ref));
    for (const auto& [s, col] : c.boundary) EXPECT_EQ(col, ref.boundary.at(s));
}

TEST(SubstitutionPattern, MatchesUnfoldingForAllWordsUpToFive) {
    for (int n = 1; n <= 5; ++n)
        for (unsigned bits = 0; bits < (1u << n); ++bits) {
            const FoldWord w = word_from_bits(bits, n);
            EXPECT_TRUE(interior_equal(substitution_pattern(w), unfold_pattern(w))) << to_string(w);
        }
}
