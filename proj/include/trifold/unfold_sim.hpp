#pragma once

// Ground-truth generator: builds finite folding patterns by explicitly
// unfolding, one elementary folding at a time.
//
// Unfolding the side-2^m triangle T_m into T_{m+1} keeps the central part
// (T_m itself), mirrors it into the three side parts with every color
// swapped, and colors the three new creases (the sides of T_m).

#include "trifold/errors.hpp"
#include "trifold/folding.hpp"
#include "trifold/lattice.hpp"
#include "trifold/pattern.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace trifold {

/// One elementary folding with an independent direction per flap. Entry i
/// belongs to the crease lying on a direction-(i+1) line.
struct MixedFold {
    std::array<FoldDirection, 3> flaps{FoldDirection::up, FoldDirection::up, FoldDirection::up};

    static constexpr MixedFold uniform(FoldDirection f) { return {{f, f, f}}; }

    constexpr bool is_uniform() const { return flaps[0] == flaps[1] && flaps[1] == flaps[2]; }

    std::string to_string() const {
        return {to_char(flaps[0]), to_char(flaps[1]), to_char(flaps[2])};
    }

    friend constexpr bool operator==(const MixedFold&, const MixedFold&) = default;
};

inline std::vector<MixedFold> uniform_folds(const FoldWord& word) {
    std::vector<MixedFold> out;
    for (FoldDirection f : word) out.push_back(MixedFold::uniform(f));
    return out;
}

/// "++-,+++": comma-separated triples, one per elementary folding.
inline std::vector<MixedFold> parse_mixed(std::string_view text) {
    std::vector<MixedFold> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        const FoldWord w = parse_word(text.substr(start, end - start));
        if (w.size() != 3) throw Error("mixed folds are triples of + and -");
        out.push_back({{w[0], w[1], w[2]}});
        start = end + 1;
    }
    return out;
}

inline std::string to_string(const std::vector<MixedFold>& folds) {
    std::string s;
    for (std::size_t i = 0; i < folds.size(); ++i) {
        if (i) s += ',';
        s += folds[i].to_string();
    }
    return s;
}

/// Unfolds the pattern on T_m (centered, positive iff m even) into T_{m+1}.
inline PatternPatch unfold_once(const PatternPatch& p, const MixedFold& fold, int m) {
    const auto level = centered_level(p.region);
    if (!level || *level != m)
        throw OrientationMismatch("unfold_once expects the centered side-2^" + std::to_string(m) + " triangle");
    const TriangleId inner = centered_triangle(m);
    const TriangleId outer = centered_triangle(m + 1);
    const Int v = inner.v[0];

    PatternPatch out;
    out.region = TriangleRegion{outer};
    out.sequence = p.sequence;
    out.interior = p.interior;
    for (const SegmentId& seg : segments_in_triangle(inner).boundary) {
        const FoldDirection f = fold.flaps[static_cast<std::size_t>(seg.d - 1)];
        out.interior[seg] = f == FoldDirection::up ? Color::red : Color::blue;
    }
    for (int d = 1; d <= 3; ++d) {
        const LineId mirror{d, v};
        for (const auto& [seg, c] : p.interior) out.interior[reflect(seg, mirror)] = swapped(c);
    }
    for (const SegmentId& seg : segments_in_triangle(outer).boundary) out.boundary.emplace(seg, std::nullopt);
    return out;
}

/// Applies folds[0] first (it creates the sides of T0), then folds[1], ...
inline PatternPatch unfold_pattern(const std::vector<MixedFold>& folds) {
    PatternPatch p;
    p.region = centered_region(0);
    for (const SegmentId& seg : segments_in_triangle(kT0).boundary) p.boundary.emplace(seg, std::nullopt);
    for (std::size_t m = 0; m < folds.size(); ++m) p = unfold_once(p, folds[m], static_cast<int>(m));
    p.sequence = to_string(folds);
    return p;
}

inline PatternPatch unfold_pattern(const FoldWord& word) {
    PatternPatch p = unfold_pattern(uniform_folds(word));
    p.sequence = to_string(word);
    return p;
}

} // namespace trifold
