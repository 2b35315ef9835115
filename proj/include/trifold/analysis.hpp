#pragma once

// Measurements on pattern windows: vertex stars, tile frequencies,
// translation periods and the block structure of single layers.

#include "trifold/errors.hpp"
#include "trifold/exact.hpp"
#include "trifold/lattice.hpp"
#include "trifold/pattern.hpp"
#include "trifold/substitution.hpp"
#include "trifold/tiling.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace trifold {

/// Six colors around a vertex, counterclockwise from +u.
using VertexStar = std::array<Color, 6>;

/// Lexicographically least rotation, e.g. "BBBBRR".
inline std::string star_class(const VertexStar& star) {
    std::string best;
    for (std::size_t r = 0; r < 6; ++r) {
        std::string s;
        for (std::size_t i = 0; i < 6; ++i) s += to_char(star[(r + i) % 6]);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

/// Two adjacent segments of one color, the other four of the other color.
inline bool is_allowed_star(const std::string& cls) { return cls == "BBBBRR" || cls == "BBRRRR"; }

inline std::optional<VertexStar> star_at(const PatternPatch& p, Vertex x) {
    VertexStar star{};
    for (std::size_t i = 0; i < 6; ++i) {
        auto it = p.interior.find(segment_between(x, x + kStarOffsets[i]));
        if (it == p.interior.end()) return std::nullopt;
        star[i] = it->second;
    }
    return star;
}

/// Star classes over the vertices whose six segments are all interior.
inline std::map<std::string, std::size_t> vertex_star_histogram(const PatternPatch& p) {
    std::set<Vertex> candidates;
    for (const auto& [s, c] : p.interior) {
        const auto [a, b] = s.endpoints();
        candidates.insert(a);
        candidates.insert(b);
    }
    std::map<std::string, std::size_t> hist;
    for (const Vertex& x : candidates)
        if (const auto star = star_at(p, x)) ++hist[star_class(*star)];
    return hist;
}

/// Vertices whose star is outside the two allowed classes.
inline std::vector<Vertex> star_violations(const PatternPatch& p) {
    std::set<Vertex> candidates;
    for (const auto& [s, c] : p.interior) {
        const auto [a, b] = s.endpoints();
        candidates.insert(a);
        candidates.insert(b);
    }
    std::vector<Vertex> out;
    for (const Vertex& x : candidates)
        if (const auto star = star_at(p, x); star && !is_allowed_star(star_class(*star))) out.push_back(x);
    return out;
}

struct Densities {
    std::size_t total = 0;
    std::array<std::size_t, 8> counts{};   // by TypeClass index - 1
    std::array<Rational, 8> frequency{};
    std::map<DecoratedType, std::size_t> decorated;

    Rational decorated_frequency(const DecoratedType& t) const {
        auto it = decorated.find(t);
        if (it == decorated.end() || total == 0) return 0;
        return Rational(it->second, total);
    }
};

/// Frequencies of the eight classes over the unit triangles whose three
/// sides are colored (interior or colored boundary).
inline Densities empirical_densities(const PatternPatch& p) {
    Densities d;
    for (const DecoratedTile& t : to_tiling(p)) {
        ++d.total;
        ++d.counts[static_cast<std::size_t>(index(type_class(t.triangle.orientation(), t.red_count)) - 1)];
        ++d.decorated[decorated_type(t)];
    }
    for (std::size_t i = 0; i < 8; ++i)
        d.frequency[i] = d.total ? Rational(d.counts[i], d.total) : Rational(0);
    return d;
}

struct Translation {
    Int p = 0;
    Int q = 0;

    Int norm_squared() const { return p * p + p * q + q * q; }
    friend auto operator<=>(const Translation&, const Translation&) = default;
};

/// Nonzero grid translations t with |t| <= max_norm.
inline std::vector<Translation> translations_up_to(Int max_norm) {
    std::vector<Translation> out;
    for (Int a = -2 * max_norm; a <= 2 * max_norm; ++a)
        for (Int b = -2 * max_norm; b <= 2 * max_norm; ++b) {
            const Translation t{a, b};
            if ((a || b) && t.norm_squared() <= max_norm * max_norm) out.push_back(t);
        }
    return out;
}

/// Translations under which the coloring agrees wherever the window and its
/// translate overlap. With `layer`, only segments of that layer count, and
/// they must land on segments of the same layer.
inline std::vector<Translation> period_check(const PatternPatch& p, Int max_norm, std::optional<int> layer = {}) {
    if (max_norm < 1) throw Error("max_norm must be positive");
    if (inner_radius(p.region) < 2.0 * static_cast<double>(max_norm))
        throw WindowTooSmall("window radius must be at least twice the largest translation");
    std::vector<std::pair<SegmentId, Color>> segs;
    for (const auto& [s, c] : p.interior)
        if (!layer || layer_of(s) == *layer) segs.emplace_back(s, c);
    std::vector<Translation> out;
    for (const Translation& t : translations_up_to(max_norm)) {
        bool ok = true;
        for (const auto& [s, c] : segs) {
            const SegmentId moved = s.translated(t.p, t.q);
            auto it = p.interior.find(moved);
            if (it == p.interior.end()) continue;
            if (it->second != c || (layer && layer_of(moved) != *layer)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(t);
    }
    return out;
}

/// True iff every layer-k line alternates in monochrome blocks of exactly
/// 2^(k-1) segments; blocks cut by the window edge may be shorter.
inline bool layer_block_check(const PatternPatch& p, int k) {
    if (k < 1) throw Error("layers start at 1");
    const Int block = pow_int(2, k - 1);
    std::map<LineId, std::map<Int, Color>> lines;
    for (const auto& [s, c] : p.interior)
        if (layer_of(s) == k) lines[line_of(s)][detail::position_on_line(s)] = c;

    std::size_t longest = 0;
    bool ok = true;
    for (const auto& [line, segs] : lines) {
        // Split into runs of consecutive positions, then each run into blocks.
        std::vector<std::vector<Color>> runs;
        Int prev = 0;
        for (const auto& [pos, c] : segs) {
            if (runs.empty() || pos != prev + 1) runs.emplace_back();
            runs.back().push_back(c);
            prev = pos;
        }
        for (const auto& run : runs) {
            longest = std::max(longest, run.size());
            std::vector<Int> blocks{1};
            for (std::size_t i = 1; i < run.size(); ++i) {
                if (run[i] == run[i - 1]) ++blocks.back();
                else blocks.push_back(1);
            }
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                const bool edge = b == 0 || b + 1 == blocks.size();
                if (edge ? blocks[b] > block : blocks[b] != block) ok = false;
            }
        }
    }
    if (static_cast<Int>(longest) < 4 * pow_int(2, k))
        throw WindowTooSmall("layer-" + std::to_string(k) + " lines are too short in this window");
    return ok;
}

} // namespace trifold
