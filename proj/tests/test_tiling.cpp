#include "trifold/folding.hpp"
#include "trifold/tiling.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace trifold;

namespace {

void expect_round_trip(const PatternPatch& p, int margin = 4) {
    const auto rec = reconstruct(strip_decoration(to_tiling(p)), margin);
    ASSERT_FALSE(rec.colors.empty());
    for (const auto& [s, c] : rec.colors) ASSERT_EQ(p.color(s), c) << s;
}

} // namespace

TEST(Decorate, MinoritySideSlot) {
    const auto rrr = decorate(kT0, {Color::red, Color::red, Color::red});
    EXPECT_EQ(rrr.red_count, 3);
    EXPECT_FALSE(rrr.decoration);
    const auto rrb = decorate(kT0, {Color::red, Color::red, Color::blue});
    EXPECT_EQ(rrb.red_count, 2);
    EXPECT_EQ(rrb.decoration, 3);
    const auto brb = decorate(kT0, {Color::blue, Color::red, Color::blue});
    EXPECT_EQ(brb.red_count, 1);
    EXPECT_EQ(brb.decoration, 2);
    EXPECT_FALSE(decorate(kT0, {Color::blue, Color::blue, Color::blue}).decoration);
}

TEST(StripDecoration, Projection) {
    const std::vector<DecoratedTile> tiles{{kT0, 3, std::nullopt}, {kT0, 2, 1}, {kT0, 1, 3}};
    const auto plain = strip_decoration(tiles);
    ASSERT_EQ(plain.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(plain[i].triangle, tiles[i].triangle);
        EXPECT_EQ(plain[i].red_count, tiles[i].red_count);
    }
}

TEST(ToTiling, AllTypesInLargeAllUpPatch) {
    const auto tiles = to_tiling(patch(FoldingSequence::parse("(+)*"), 6));
    EXPECT_EQ(tiles.size(), 4096u);
    std::set<DecoratedType> decorated;
    std::set<std::pair<Orientation, int>> plain;
    for (const auto& t : tiles) {
        decorated.insert(decorated_type(t));
        plain.insert({t.triangle.orientation(), t.red_count});
        EXPECT_EQ(t.decoration.has_value(), t.red_count == 1 || t.red_count == 2);
    }
    EXPECT_EQ(decorated.size(), 16u);
    EXPECT_EQ(plain.size(), 8u);
}

TEST(ToTiling, SkipsTilesWithUncoloredSides) {
    const auto tiles = to_tiling(patch(FoldingSequence::parse("++"), 2));
    // The side-4 finite pattern has uncolored boundary: only the medial tile
    // and the tiles not touching the boundary survive.
    for (const auto& t : tiles)
        for (const SegmentId& s : sides(t.triangle)) EXPECT_FALSE(on_boundary(centered_triangle(2), s));
}

TEST(Reconstruct, AllUpSide32) {
    const auto p = patch(FoldingSequence::parse("(+)*"), 5);
    expect_round_trip(p);
}

TEST(Reconstruct, PeriodicPlusMinusRadius24) { expect_round_trip(ball_patch(FoldingSequence::parse("(+-)*"), 24)); }

TEST(Reconstruct, UniformWordsUpToFive) {
    for (int n = 1; n <= 5; ++n)
        for (unsigned bits = 0; bits < (1u << n); ++bits) {
            FoldWord w;
            for (int i = 0; i < n; ++i) w.push_back((bits >> i) & 1 ? FoldDirection::down : FoldDirection::up);
            const auto s = FoldingSequence::periodic(w);
            expect_round_trip(ball_patch(s, 16));
            expect_round_trip(ball_patch(s, 32));
        }
}

TEST(Reconstruct, ErodedRegionShrinksWithMargin) {
    const auto tiles = strip_decoration(to_tiling(ball_patch(FoldingSequence::parse("(+)*"), 16)));
    const auto m4 = reconstruct(tiles, 4).colors.size();
    const auto m6 = reconstruct(tiles, 6).colors.size();
    EXPECT_GT(m4, m6);
    EXPECT_GT(m6, 0u);
}

TEST(Reconstruct, CorruptedRedCountIsInconsistent) {
    auto tiles = strip_decoration(to_tiling(ball_patch(FoldingSequence::parse("(+)*"), 16)));
    const auto t0 = std::find_if(tiles.begin(), tiles.end(), [](const UndecoratedTile& t) { return t.triangle == kT0; });
    ASSERT_NE(t0, tiles.end());
    for (int delta = 1; delta <= 3; ++delta) {
        auto bad = tiles;
        auto& tile = bad[static_cast<std::size_t>(t0 - tiles.begin())];
        tile.red_count = (tile.red_count + delta) % 4;
        EXPECT_THROW(reconstruct(bad), Inconsistent);
    }
}

TEST(Reconstruct, EveryCorruptionNearTheCenterIsCaught) {
    const auto tiles = strip_decoration(to_tiling(ball_patch(FoldingSequence::parse("(+--)*"), 12)));
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        if (!in_ball(vertices(tiles[i].triangle)[0], 5)) continue;
        auto bad = tiles;
        bad[i].red_count = (bad[i].red_count + 1) % 4;
        EXPECT_THROW(reconstruct(bad), Inconsistent) << tiles[i].triangle;
    }
}

TEST(Reconstruct, TinyWindowIsUndecidable) {
    EXPECT_THROW(reconstruct(strip_decoration(to_tiling(ball_patch(FoldingSequence::parse("(+)*"), 1)))),
                 Undecidable);
    EXPECT_THROW(reconstruct({}), Undecidable);
}

// Given the outer sides and red counts, exactly one spoke assignment around
// each hexagon center is consistent.
TEST(Reconstruct, HexagonSpokesAreUnique) {
    const auto p = ball_patch(FoldingSequence::parse("(+-)*"), 12);
    int hexagons = 0;
    for (Int a = -4; a <= 4; ++a)
        for (Int b = -4; b <= 4; ++b) {
            const Vertex c{a, b};
            if (floor_mod(c.f1(), 6) != 4 || floor_mod(c.f3(), 6) != 4) continue;
            std::array<int, 6> need{};
            for (std::size_t i = 0; i < 6; ++i) {
                const Vertex x = c + kStarOffsets[i], y = c + kStarOffsets[(i + 1) % 6];
                const auto sc = p.side_colors(triangle_from_vertices(c, x, y));
                ASSERT_TRUE(sc);
                int reds = 0;
                for (Color col : *sc) reds += col == Color::red;
                need[i] = reds - (p.color(segment_between(x, y)) == Color::red ? 1 : 0);
            }
            int solutions = 0;
            for (unsigned mask = 0; mask < 64; ++mask) {
                bool ok = true;
                for (std::size_t i = 0; i < 6; ++i)
                    ok = ok && static_cast<int>(((mask >> i) & 1) + ((mask >> ((i + 1) % 6)) & 1)) == need[i];
                solutions += ok;
            }
            EXPECT_EQ(solutions, 1);
            ++hexagons;
        }
    EXPECT_GT(hexagons, 5);
}
