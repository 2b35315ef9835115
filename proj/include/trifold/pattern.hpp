#pragma once

// Finite windows of a red/blue coloring of the grid.

#include "trifold/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace trifold {

/// red = valley, blue = peak.
enum class Color : std::uint8_t { red, blue };

constexpr Color swapped(Color c) { return c == Color::red ? Color::blue : Color::red; }

constexpr char to_char(Color c) { return c == Color::red ? 'R' : 'B'; }

/// Window shape: a grid triangle, a closed ball about O, or an arbitrary set
/// of segments.
struct TriangleRegion {
    TriangleId triangle;
    friend bool operator==(const TriangleRegion&, const TriangleRegion&) = default;
};

struct BallRegion {
    Int radius = 0;
    friend bool operator==(const BallRegion&, const BallRegion&) = default;
};

struct CustomRegion {
    friend bool operator==(const CustomRegion&, const CustomRegion&) = default;
};

using Region = std::variant<TriangleRegion, BallRegion, CustomRegion>;

inline Region centered_region(int k) { return TriangleRegion{centered_triangle(k)}; }

/// Level k when the region is the side-2^k triangle centered at O.
inline std::optional<int> centered_level(const Region& region) {
    const auto* tri = std::get_if<TriangleRegion>(&region);
    if (!tri) return std::nullopt;
    const TriangleId& t = tri->triangle;
    if (t.v[0] != t.v[1] || t.v[1] != t.v[2]) return std::nullopt;
    Int v = t.v[0];
    int k = 0;
    while (v != 1) {
        if (v % 2 != 0 || k > 60) return std::nullopt;
        v /= -2;
        ++k;
    }
    return k;
}

/// Radius of the largest ball about the region's center that it contains.
/// Only used for window size checks.
inline double inner_radius(const Region& region) {
    if (const auto* b = std::get_if<BallRegion>(&region)) return static_cast<double>(b->radius);
    if (const auto* t = std::get_if<TriangleRegion>(&region))
        return static_cast<double>(t->triangle.side()) / (2.0 * 1.7320508075688772);
    return 0.0;
}

/// A window of the coloring. Interior segments carry exactly one color;
/// boundary segments are flagged and may or may not carry one. Comparisons
/// between patches only look at interior segments.
struct PatternPatch {
    Region region = CustomRegion{};
    std::string sequence;
    std::map<SegmentId, Color> interior;
    std::map<SegmentId, std::optional<Color>> boundary;

    std::optional<Color> color(const SegmentId& seg) const {
        if (auto it = interior.find(seg); it != interior.end()) return it->second;
        if (auto it = boundary.find(seg); it != boundary.end()) return it->second;
        return std::nullopt;
    }

    bool is_interior(const SegmentId& seg) const { return interior.contains(seg); }

    /// Side colors of a unit triangle when all three are known.
    std::optional<std::array<Color, 3>> side_colors(const TriangleId& t) const {
        std::array<Color, 3> out{};
        const auto ss = sides(t);
        for (std::size_t i = 0; i < 3; ++i) {
            auto c = color(ss[i]);
            if (!c) return std::nullopt;
            out[i] = *c;
        }
        return out;
    }

    friend bool operator==(const PatternPatch&, const PatternPatch&) = default;
};

struct Mismatch {
    SegmentId segment;
    Color left;
    Color right;
};

/// Segments interior to both patches whose colors differ.
inline std::vector<Mismatch> interior_mismatches(const PatternPatch& a, const PatternPatch& b) {
    std::vector<Mismatch> out;
    for (const auto& [seg, c] : a.interior) {
        auto it = b.interior.find(seg);
        if (it != b.interior.end() && it->second != c) out.push_back({seg, c, it->second});
    }
    return out;
}

/// Same interior segment set and identical colors on it.
inline bool interior_equal(const PatternPatch& a, const PatternPatch& b) {
    return a.interior == b.interior;
}

/// Distinct unit triangles having at least one side in the patch, sorted.
inline std::vector<TriangleId> touched_unit_triangles(const PatternPatch& patch) {
    std::vector<TriangleId> out;
    auto add = [&](const SegmentId& s) {
        auto [pos, neg] = adjacent_unit_triangles(s);
        out.push_back(pos);
        out.push_back(neg);
    };
    for (const auto& [s, c] : patch.interior) add(s);
    for (const auto& [s, c] : patch.boundary) add(s);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace trifold
