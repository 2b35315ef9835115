#pragma once

// Text formats for patterns and tilings.
//
//   trifold-pattern 1
//   sequence (+-)*
//   region triangle 4 4 4        | ball R | custom
//   segments N
//   d p q R|B|- [*]              one per segment, sorted by (d,p,q); * = boundary
//
//   trifold-tiling 1
//   tiles N
//   +|- p q red_count [slot]     sorted by triangle

#include "trifold/errors.hpp"
#include "trifold/lattice.hpp"
#include "trifold/pattern.hpp"
#include "trifold/tiling.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace trifold {

inline void write_pattern(std::ostream& os, const PatternPatch& p) {
    os << "trifold-pattern 1\n";
    os << "sequence " << p.sequence << '\n';
    if (const auto* t = std::get_if<TriangleRegion>(&p.region))
        os << "region triangle " << t->triangle.v[0] << ' ' << t->triangle.v[1] << ' ' << t->triangle.v[2] << '\n';
    else if (const auto* b = std::get_if<BallRegion>(&p.region))
        os << "region ball " << b->radius << '\n';
    else
        os << "region custom\n";
    os << "segments " << p.interior.size() + p.boundary.size() << '\n';
    auto in = p.interior.begin();
    auto bd = p.boundary.begin();
    auto record = [&](const SegmentId& s, char color, bool boundary) {
        os << s.d << ' ' << s.p << ' ' << s.q << ' ' << color << (boundary ? " *" : "") << '\n';
    };
    while (in != p.interior.end() || bd != p.boundary.end()) {
        if (bd == p.boundary.end() || (in != p.interior.end() && in->first < bd->first)) {
            record(in->first, to_char(in->second), false);
            ++in;
        } else {
            record(bd->first, bd->second ? to_char(*bd->second) : '-', true);
            ++bd;
        }
    }
}

inline std::string pattern_to_string(const PatternPatch& p) {
    std::ostringstream os;
    write_pattern(os, p);
    return os.str();
}

namespace detail {

class LineReader {
public:
    explicit LineReader(std::istream& is) : is_(is) {}

    std::vector<std::string> next(const char* what) {
        std::string line;
        if (!std::getline(is_, line)) throw ParseError(line_ + 1, std::string("expected ") + what);
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> tokens;
        std::istringstream ss(line);
        for (std::string tok; ss >> tok;) tokens.push_back(tok);
        last_ = line;
        return tokens;
    }

    const std::string& raw() const { return last_; }
    std::size_t line() const { return line_; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

    Int integer(const std::string& tok) const {
        Int v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail("invalid integer '" + tok + "'");
        return v;
    }

    void expect_end(std::string_view what) {
        std::string line;
        while (std::getline(is_, line)) {
            ++line_;
            if (line.find_first_not_of(" \t\r") != std::string::npos) fail("trailing content after " + std::string(what));
        }
    }

private:
    std::istream& is_;
    std::size_t line_ = 0;
    std::string last_;
};

inline std::optional<Color> parse_color(const LineReader& r, const std::string& tok) {
    if (tok == "R") return Color::red;
    if (tok == "B") return Color::blue;
    if (tok == "-") return std::nullopt;
    r.fail("invalid color '" + tok + "'");
}

} // namespace detail

inline PatternPatch read_pattern(std::istream& is) {
    detail::LineReader r(is);
    auto tok = r.next("header");
    if (tok != std::vector<std::string>{"trifold-pattern", "1"}) r.fail("not a trifold-pattern 1 file");

    PatternPatch p;
    tok = r.next("sequence line");
    if (tok.empty() || tok[0] != "sequence" || tok.size() > 2) r.fail("expected 'sequence <text>'");
    p.sequence = tok.size() == 2 ? tok[1] : "";

    tok = r.next("region line");
    if (tok.size() == 5 && tok[0] == "region" && tok[1] == "triangle") {
        const TriangleId t{{r.integer(tok[2]), r.integer(tok[3]), r.integer(tok[4])}};
        if (!is_valid_triangle(t)) r.fail("not a grid triangle");
        p.region = TriangleRegion{t};
    } else if (tok.size() == 3 && tok[0] == "region" && tok[1] == "ball") {
        p.region = BallRegion{r.integer(tok[2])};
    } else if (tok.size() == 2 && tok[0] == "region" && tok[1] == "custom") {
        p.region = CustomRegion{};
    } else {
        r.fail("expected 'region triangle v1 v2 v3', 'region ball R' or 'region custom'");
    }

    tok = r.next("segment count");
    if (tok.size() != 2 || tok[0] != "segments") r.fail("expected 'segments N'");
    const Int n = r.integer(tok[1]);
    if (n < 0) r.fail("negative segment count");

    std::optional<SegmentId> prev;
    for (Int i = 0; i < n; ++i) {
        tok = r.next("segment record");
        if (tok.size() != 4 && tok.size() != 5) r.fail("expected 'd p q color [*]'");
        const SegmentId s{static_cast<int>(r.integer(tok[0])), r.integer(tok[1]), r.integer(tok[2])};
        if (s.d < 1 || s.d > 3) r.fail("direction must be 1, 2 or 3");
        if (prev && !(*prev < s)) r.fail("records must be sorted and unique");
        prev = s;
        const auto c = detail::parse_color(r, tok[3]);
        if (tok.size() == 5) {
            if (tok[4] != "*") r.fail("expected '*' boundary flag");
            p.boundary.emplace_hint(p.boundary.end(), s, c);
        } else {
            if (!c) r.fail("interior segments must be colored");
            p.interior.emplace_hint(p.interior.end(), s, *c);
        }
    }
    r.expect_end("segment records");
    return p;
}

inline PatternPatch pattern_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_pattern(is);
}

inline void write_tiling(std::ostream& os, const std::vector<DecoratedTile>& tiles) {
    std::vector<DecoratedTile> sorted = tiles;
    std::sort(sorted.begin(), sorted.end(),
              [](const DecoratedTile& a, const DecoratedTile& b) { return a.triangle < b.triangle; });
    os << "trifold-tiling 1\n";
    os << "tiles " << sorted.size() << '\n';
    for (const auto& t : sorted) {
        const UnitAnchor a = anchor_of(t.triangle);
        os << (a.orientation == Orientation::positive ? '+' : '-') << ' ' << a.p << ' ' << a.q << ' ' << t.red_count;
        if (t.decoration) os << ' ' << *t.decoration;
        os << '\n';
    }
}

inline void write_tiling(std::ostream& os, const std::vector<UndecoratedTile>& tiles) {
    std::vector<DecoratedTile> plain;
    for (const auto& t : tiles) plain.push_back({t.triangle, t.red_count, std::nullopt});
    write_tiling(os, plain);
}

inline std::vector<DecoratedTile> read_tiling(std::istream& is) {
    detail::LineReader r(is);
    auto tok = r.next("header");
    if (tok != std::vector<std::string>{"trifold-tiling", "1"}) r.fail("not a trifold-tiling 1 file");
    tok = r.next("tile count");
    if (tok.size() != 2 || tok[0] != "tiles") r.fail("expected 'tiles N'");
    const Int n = r.integer(tok[1]);
    if (n < 0) r.fail("negative tile count");
    std::vector<DecoratedTile> out;
    for (Int i = 0; i < n; ++i) {
        tok = r.next("tile record");
        if (tok.size() != 4 && tok.size() != 5) r.fail("expected '+|- p q red_count [slot]'");
        if (tok[0] != "+" && tok[0] != "-") r.fail("orientation must be + or -");
        const Orientation o = tok[0] == "+" ? Orientation::positive : Orientation::negative;
        DecoratedTile t{unit_triangle(o, r.integer(tok[1]), r.integer(tok[2])), static_cast<int>(r.integer(tok[3])),
                        std::nullopt};
        if (t.red_count < 0 || t.red_count > 3) r.fail("red count must be 0..3");
        if (tok.size() == 5) {
            const Int slot = r.integer(tok[4]);
            if (slot < 1 || slot > 3) r.fail("decoration slot must be 1..3");
            if (t.red_count == 0 || t.red_count == 3) r.fail("monochrome tiles carry no decoration");
            t.decoration = static_cast<int>(slot);
        }
        if (!out.empty() && !(out.back().triangle < t.triangle)) r.fail("records must be sorted and unique");
        out.push_back(t);
    }
    r.expect_end("tile records");
    return out;
}

inline std::string tiling_to_string(const std::vector<DecoratedTile>& tiles) {
    std::ostringstream os;
    write_tiling(os, tiles);
    return os.str();
}

inline std::vector<DecoratedTile> tiling_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_tiling(is);
}

} // namespace trifold
