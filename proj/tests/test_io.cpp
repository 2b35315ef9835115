#include "trifold/folding.hpp"
#include "trifold/io.hpp"
#include "trifold/render.hpp"
#include "trifold/tiling.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace trifold;

TEST(PatternFile, LevelOneAllUp) {
    const std::string text = pattern_to_string(patch(FoldingSequence::parse("+"), 1));
    EXPECT_EQ(text.rfind("trifold-pattern 1\nsequence +\nregion triangle -2 -2 -2\nsegments 9\n", 0), 0u) << text;
    std::size_t interior = 0;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        if (line.size() > 2 && line.back() == 'R') ++interior;
    EXPECT_EQ(interior, 3u);
}

TEST(PatternFile, RoundTrip) {
    for (const char* s : {"+", "+-+", "(+-)*", "--(+)*"}) {
        const auto seq = FoldingSequence::parse(s);
        const PatternPatch p = seq.is_finite() ? patch(seq, seq.length()) : patch(seq, 4);
        const std::string text = pattern_to_string(p);
        const PatternPatch back = pattern_from_string(text);
        EXPECT_EQ(back, p);
        EXPECT_EQ(pattern_to_string(back), text);
    }
    const auto ball = ball_patch(FoldingSequence::parse("(+)*"), 6);
    EXPECT_EQ(pattern_from_string(pattern_to_string(ball)), ball);
}

TEST(PatternFile, RandomPatchesRoundTrip) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        PatternPatch p;
        p.region = CustomRegion{};
        p.sequence = trial % 2 ? "x" : "";
        for (int i = 0; i < 50; ++i) {
            const SegmentId s{1 + static_cast<int>(rng() % 3), static_cast<Int>(rng() % 21) - 10,
                              static_cast<Int>(rng() % 21) - 10};
            const Color c = rng() & 1 ? Color::red : Color::blue;
            switch (rng() % 3) {
            case 0: p.interior[s] = c; break;
            case 1:
                if (!p.interior.contains(s)) p.boundary[s] = c;
                break;
            default:
                if (!p.interior.contains(s)) p.boundary[s] = std::nullopt;
            }
        }
        for (const auto& [s, c] : p.interior) p.boundary.erase(s);
        EXPECT_EQ(pattern_from_string(pattern_to_string(p)), p);
    }
}

TEST(PatternFile, Errors) {
    const std::string good = "trifold-pattern 1\nsequence +\nregion custom\nsegments 1\n1 0 0 R\n";
    EXPECT_NO_THROW(pattern_from_string(good));
    try {
        pattern_from_string("trifold-pattern 1\nsequence +\nregion custom\nsegments 1\n1 0 0 G\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 5u);
    }
    EXPECT_THROW(pattern_from_string("nope\n"), ParseError);
    EXPECT_THROW(pattern_from_string("trifold-pattern 1\nsequence +\nregion custom\nsegments 2\n1 0 0 R\n"),
                 ParseError);
    EXPECT_THROW(pattern_from_string("trifold-pattern 1\nsequence +\nregion custom\nsegments 2\n1 1 0 R\n1 0 0 R\n"),
                 ParseError);
    EXPECT_THROW(pattern_from_string("trifold-pattern 1\nsequence +\nregion custom\nsegments 1\n1 0 0 -\n"),
                 ParseError);
    EXPECT_THROW(pattern_from_string("trifold-pattern 1\nsequence +\nregion custom\nsegments 1\n4 0 0 R\n"),
                 ParseError);
    EXPECT_THROW(pattern_from_string(good + "1 1 1 R\n"), ParseError);
}

TEST(TilingFile, RoundTrip) {
    const auto tiles = to_tiling(patch(FoldingSequence::parse("(+-)*"), 4));
    const std::string text = tiling_to_string(tiles);
    EXPECT_EQ(tiling_from_string(text), tiles);
    EXPECT_EQ(tiling_to_string(tiling_from_string(text)), text);

    std::ostringstream plain;
    write_tiling(plain, strip_decoration(tiles));
    EXPECT_EQ(strip_decoration(tiling_from_string(plain.str())), strip_decoration(tiles));
}

TEST(TilingFile, Errors) {
    EXPECT_THROW(tiling_from_string("trifold-tiling 1\ntiles 1\n+ 0 0 3 1\n"), ParseError);
    EXPECT_THROW(tiling_from_string("trifold-tiling 1\ntiles 1\n* 0 0 3\n"), ParseError);
    EXPECT_THROW(tiling_from_string("trifold-tiling 1\ntiles 1\n+ 0 0 5\n"), ParseError);
    EXPECT_THROW(tiling_from_string("trifold-tiling 1\ntiles 1\n+ 0 0 2 4\n"), ParseError);
    EXPECT_NO_THROW(tiling_from_string("trifold-tiling 1\ntiles 1\n+ 0 0 2 3\n"));
}

TEST(Svg, EmptyDocument) {
    const std::string svg = render_svg(PatternPatch{});
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    EXPECT_EQ(svg.find("<line"), std::string::npos);
    EXPECT_NE(render_svg(std::vector<DecoratedTile>{}).find("</svg>"), std::string::npos);
}

TEST(Svg, AllUpSixContent) {
    const auto p = patch(FoldingSequence::parse("(+)*"), 6);
    const std::string svg = render_svg(p);
    std::size_t lines = 0, red = 0, blue = 0;
    for (std::size_t pos = 0; (pos = svg.find("<line", pos)) != std::string::npos; ++pos) ++lines;
    for (std::size_t pos = 0; (pos = svg.find("#E41A1C", pos)) != std::string::npos; ++pos) ++red;
    for (std::size_t pos = 0; (pos = svg.find("#377EB8", pos)) != std::string::npos; ++pos) ++blue;
    EXPECT_EQ(lines, p.interior.size() + p.boundary.size());
    std::size_t reds = 0;
    for (const auto& [s, c] : p.interior) reds += c == Color::red;
    for (const auto& [s, c] : p.boundary) reds += c == Color::red;
    EXPECT_EQ(red, reds);
    EXPECT_EQ(red + blue, lines);
    EXPECT_EQ(svg, render_svg(p));
}

TEST(Svg, FourDecimals) {
    const std::string svg = render_svg(patch(FoldingSequence::parse("+"), 1));
    EXPECT_NE(svg.find("x1=\"0.0000\""), std::string::npos);
    EXPECT_EQ(svg.find("-0.0000"), std::string::npos);
    const std::string tiles = render_svg(to_tiling(patch(FoldingSequence::parse("(+)*"), 2)));
    EXPECT_NE(tiles.find("<polygon"), std::string::npos);
    EXPECT_NE(tiles.find("<circle"), std::string::npos);
}
