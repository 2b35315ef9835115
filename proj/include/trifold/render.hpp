#pragma once

// SVG 1.1 output for patterns and tilings. Coordinates are printed with four
// decimals so the text is byte-stable across platforms.

#include "trifold/lattice.hpp"
#include "trifold/pattern.hpp"
#include "trifold/tiling.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace trifold {

struct RenderStyle {
    double scale = 20.0;          // pixels per unit segment
    double stroke_width = 2.0;
    double margin = 10.0;
    bool decorations = true;
    std::string red = "#E41A1C";
    std::string blue = "#377EB8";
    std::string uncolored = "#BBBBBB";
    // Tile fill by red count 0..3 (ColorBrewer Set2).
    std::array<std::string, 4> tile_fill{"#66C2A5", "#FC8D62", "#8DA0CB", "#E78AC3"};
};

namespace detail {

inline std::string fixed4(double x) {
    if (std::abs(x) < 0.00005) x = 0.0;
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 4);
    return std::string(buf, res.ptr);
}

struct Point {
    double x = 0;
    double y = 0;
};

// u = (1, 0), w = (1/2, sqrt(3)/2); SVG y grows downwards.
inline Point to_point(Vertex v, double scale) {
    constexpr double h = 0.86602540378443865;
    return {(static_cast<double>(v.p) + 0.5 * static_cast<double>(v.q)) * scale,
            -static_cast<double>(v.q) * h * scale};
}

class SvgBuilder {
public:
    explicit SvgBuilder(const RenderStyle& style) : style_(style) {}

    Point point(Vertex v) {
        const Point p = to_point(v, style_.scale);
        lo_.x = std::min(lo_.x, p.x);
        lo_.y = std::min(lo_.y, p.y);
        hi_.x = std::max(hi_.x, p.x);
        hi_.y = std::max(hi_.y, p.y);
        return p;
    }

    void add(std::string element) { body_ += element; }

    std::string finish() const {
        double x0 = 0, y0 = 0, w = 0, h = 0;
        if (!body_.empty()) {
            x0 = lo_.x - style_.margin;
            y0 = lo_.y - style_.margin;
            w = hi_.x - lo_.x + 2 * style_.margin;
            h = hi_.y - lo_.y + 2 * style_.margin;
        }
        std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed4(w) + "\" height=\"" +
               fixed4(h) + "\" viewBox=\"" + fixed4(x0) + ' ' + fixed4(y0) + ' ' + fixed4(w) + ' ' + fixed4(h) +
               "\">\n";
        out += body_;
        out += "</svg>\n";
        return out;
    }

private:
    const RenderStyle& style_;
    Point lo_{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
    Point hi_{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
    std::string body_;
};

} // namespace detail

/// One <line> per segment in (d,p,q) order; uncolored boundary segments grey.
inline std::string render_svg(const PatternPatch& p, const RenderStyle& style = {}) {
    detail::SvgBuilder svg(style);
    std::vector<std::pair<SegmentId, std::optional<Color>>> segs;
    for (const auto& [s, c] : p.interior) segs.emplace_back(s, c);
    for (const auto& [s, c] : p.boundary) segs.emplace_back(s, c);
    std::sort(segs.begin(), segs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!segs.empty())
        svg.add("<g stroke-width=\"" + detail::fixed4(style.stroke_width) + "\" stroke-linecap=\"round\">\n");
    for (const auto& [s, c] : segs) {
        const auto [a, b] = s.endpoints();
        const auto pa = svg.point(a), pb = svg.point(b);
        const std::string& color = !c ? style.uncolored : *c == Color::red ? style.red : style.blue;
        svg.add("<line x1=\"" + detail::fixed4(pa.x) + "\" y1=\"" + detail::fixed4(pa.y) + "\" x2=\"" +
                detail::fixed4(pb.x) + "\" y2=\"" + detail::fixed4(pb.y) + "\" stroke=\"" + color + "\"/>\n");
    }
    if (!segs.empty()) svg.add("</g>\n");
    return svg.finish();
}

/// Filled triangles by red count; a dot marks the decorated side.
inline std::string render_svg(const std::vector<DecoratedTile>& tiles, const RenderStyle& style = {}) {
    detail::SvgBuilder svg(style);
    std::vector<DecoratedTile> sorted = tiles;
    std::sort(sorted.begin(), sorted.end(),
              [](const DecoratedTile& a, const DecoratedTile& b) { return a.triangle < b.triangle; });
    if (!sorted.empty()) svg.add("<g stroke=\"#FFFFFF\" stroke-width=\"0.5000\">\n");
    std::string dots;
    for (const auto& t : sorted) {
        const auto vs = vertices(t.triangle);
        std::array<detail::Point, 3> pts;
        for (std::size_t i = 0; i < 3; ++i) pts[i] = svg.point(vs[i]);
        std::string poly = "<polygon points=\"";
        for (std::size_t i = 0; i < 3; ++i)
            poly += (i ? " " : "") + detail::fixed4(pts[i].x) + ',' + detail::fixed4(pts[i].y);
        const auto fill = static_cast<std::size_t>(std::clamp(t.red_count, 0, 3));
        poly += "\" fill=\"" + style.tile_fill[fill] + "\"/>\n";
        svg.add(poly);
        if (style.decorations && t.decoration) {
            // vertices(t)[i] is opposite slot i+1; the dot sits between the
            // centroid and the midpoint of the decorated side.
            const std::size_t opp = static_cast<std::size_t>(*t.decoration - 1);
            const detail::Point c{(pts[0].x + pts[1].x + pts[2].x) / 3, (pts[0].y + pts[1].y + pts[2].y) / 3};
            const detail::Point m{(pts[(opp + 1) % 3].x + pts[(opp + 2) % 3].x) / 2,
                                  (pts[(opp + 1) % 3].y + pts[(opp + 2) % 3].y) / 2};
            dots += "<circle cx=\"" + detail::fixed4((c.x + m.x) / 2) + "\" cy=\"" + detail::fixed4((c.y + m.y) / 2) +
                    "\" r=\"" + detail::fixed4(style.scale * 0.06) + "\" fill=\"#333333\"/>\n";
        }
    }
    if (!sorted.empty()) svg.add("</g>\n");
    svg.add(dots);
    return svg.finish();
}

} // namespace trifold
