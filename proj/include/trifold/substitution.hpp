#pragma once

// Tile-local substitution rules F+ and F- and their count matrices.
//
// A rule maps a unit triangle to its 2-inflation (same orientation) cut
// into four unit triangles. The outer sides carry the swapped colors of the
// original sides; the medial triangle is monochrome: F+ colors a positive
// medial red and a negative one blue, F- does the opposite.

#include "trifold/errors.hpp"
#include "trifold/folding.hpp"
#include "trifold/lattice.hpp"
#include "trifold/pattern.hpp"

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace trifold {

struct TriangleColoring {
    Orientation orientation = Orientation::positive;
    std::array<Color, 3> colors{Color::red, Color::red, Color::red};

    int red_count() const {
        int n = 0;
        for (Color c : colors) n += c == Color::red;
        return n;
    }

    /// Cyclic rotation of the side slots (slot i takes the color of slot i+1).
    TriangleColoring rotated() const { return {orientation, {colors[1], colors[2], colors[0]}}; }

    friend bool operator==(const TriangleColoring&, const TriangleColoring&) = default;
};

/// Rotation classes in matrix order.
enum class TypeClass : std::uint8_t {
    p_rrr = 1, p_rrb, p_rbb, p_bbb, n_bbb, n_rbb, n_rrb, n_rrr
};

inline constexpr int kTypeCount = 8;

constexpr int index(TypeClass t) { return static_cast<int>(t); }

constexpr TypeClass type_class(Orientation o, int red_count) {
    return static_cast<TypeClass>(o == Orientation::positive ? 4 - red_count : 5 + red_count);
}

inline TypeClass type_class(const TriangleColoring& t) { return type_class(t.orientation, t.red_count()); }

inline constexpr std::array<const char*, 8> kTypeNames = {"P-RRR", "P-RRB", "P-RBB", "P-BBB",
                                                          "N-BBB", "N-RBB", "N-RRB", "N-RRR"};

constexpr const char* name(TypeClass t) { return kTypeNames[static_cast<std::size_t>(index(t) - 1)]; }

/// A coloring of the class with the red sides in the lowest slots.
inline TriangleColoring representative(TypeClass t) {
    const int i = index(t);
    const Orientation o = i <= 4 ? Orientation::positive : Orientation::negative;
    const int reds = i <= 4 ? 4 - i : i - 5;
    TriangleColoring c{o, {}};
    for (int s = 0; s < 3; ++s) c.colors[static_cast<std::size_t>(s)] = s < reds ? Color::red : Color::blue;
    return c;
}

enum class SubRule : std::uint8_t { plus, minus };

constexpr SubRule rule_for(FoldDirection f) { return f == FoldDirection::up ? SubRule::plus : SubRule::minus; }

constexpr const char* name(SubRule r) { return r == SubRule::plus ? "F+" : "F-"; }

constexpr Color medial_color(SubRule rule, Orientation medial) {
    const bool positive = medial == Orientation::positive;
    return (rule == SubRule::plus) == positive ? Color::red : Color::blue;
}

/// A colored unit triangle at a definite place in the grid.
struct PlacedTile {
    TriangleId triangle;
    std::array<Color, 3> colors{};

    TriangleColoring coloring() const { return {triangle.orientation(), colors}; }

    friend bool operator==(const PlacedTile&, const PlacedTile&) = default;
};

/// The 2-inflation x -> 2x - v(0,0), which maps grid vertex (p,q) to (2p,2q).
constexpr TriangleId inflate(const TriangleId& t) {
    return {{2 * t.v[0] - 1, 2 * t.v[1] + 2, 2 * t.v[2] - 1}};
}

inline std::array<PlacedTile, 4> apply_rule_tile(SubRule rule, const PlacedTile& tile) {
    const TriangleId big = inflate(tile.triangle);
    const Orientation o = big.orientation();
    const Int shift = o == Orientation::positive ? -3 : 3;
    const Color medial = medial_color(rule, flipped(o));
    std::array<PlacedTile, 4> out;
    for (std::size_t i = 0; i < 3; ++i) {
        PlacedTile& corner = out[i];
        corner.triangle = big;
        corner.triangle.v[i] += shift;
        for (std::size_t j = 0; j < 3; ++j) corner.colors[j] = (j == i) ? medial : swapped(tile.colors[j]);
    }
    out[3].triangle = {{big.v[0] + shift, big.v[1] + shift, big.v[2] + shift}};
    out[3].colors = {medial, medial, medial};
    return out;
}

/// Class counts of a rule image, as a column of the count matrix.
inline std::array<Int, 8> image_counts(SubRule rule, const TriangleColoring& c) {
    const TriangleId where = c.orientation == Orientation::positive ? kT0 : unit_triangle(Orientation::negative, 0, 0);
    std::array<Int, 8> counts{};
    for (const PlacedTile& t : apply_rule_tile(rule, {where, c.colors}))
        ++counts[static_cast<std::size_t>(index(type_class(t.coloring())) - 1)];
    return counts;
}

using CountMatrix = std::array<std::array<Int, 8>, 8>;

inline CountMatrix multiply(const CountMatrix& a, const CountMatrix& b) {
    CountMatrix c{};
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t k = 0; k < 8; ++k)
            for (std::size_t j = 0; j < 8; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

/// M[i][j] = number of class-(i+1) tiles in the image of a class-(j+1) tile.
inline CountMatrix substitution_matrix(SubRule rule) {
    CountMatrix m{};
    for (int j = 1; j <= 8; ++j) {
        const auto col = image_counts(rule, representative(static_cast<TypeClass>(j)));
        for (std::size_t i = 0; i < 8; ++i) m[i][static_cast<std::size_t>(j - 1)] = col[i];
    }
    return m;
}

/// M_{a1} M_{a2} ... M_{ak}.
inline CountMatrix substitution_matrix(const FoldWord& word) {
    if (word.empty()) throw Error("empty word");
    CountMatrix m = substitution_matrix(rule_for(word.front()));
    for (std::size_t i = 1; i < word.size(); ++i) m = multiply(m, substitution_matrix(rule_for(word[i])));
    return m;
}

inline PatternPatch translate(const PatternPatch& p, Int dp, Int dq) {
    PatternPatch out;
    out.sequence = p.sequence;
    if (const auto* t = std::get_if<TriangleRegion>(&p.region)) {
        TriangleId moved = t->triangle;
        moved.v[0] -= 3 * dq;
        moved.v[2] -= 3 * dp;
        moved.v[1] += 3 * (dp + dq);
        out.region = TriangleRegion{moved};
    } else {
        out.region = CustomRegion{};
    }
    for (const auto& [s, c] : p.interior) out.interior.emplace(s.translated(dp, dq), c);
    for (const auto& [s, c] : p.boundary) out.boundary.emplace(s.translated(dp, dq), c);
    return out;
}

/// A one-tile patch: the seed's three sides are its (colored) boundary.
inline PatternPatch seed_patch(const PlacedTile& seed) {
    PatternPatch p;
    p.region = TriangleRegion{seed.triangle};
    const auto ss = sides(seed.triangle);
    for (std::size_t i = 0; i < 3; ++i) p.boundary.emplace(ss[i], seed.colors[i]);
    return p;
}

/// Applies the rule to every unit triangle of a triangular patch. All sides,
/// boundary included, must be colored.
inline PatternPatch apply_rule_patch(SubRule rule, const PatternPatch& p) {
    const auto* region = std::get_if<TriangleRegion>(&p.region);
    if (!region) throw Error("substitution needs a triangular patch");
    const TriangleId big = inflate(region->triangle);
    std::map<SegmentId, Color> colors;
    for (const TriangleId& t : unit_triangles_in(region->triangle)) {
        const auto sc = p.side_colors(t);
        if (!sc) throw Error("patch does not color every side of its unit triangles");
        for (const PlacedTile& child : apply_rule_tile(rule, {t, *sc})) {
            const auto ss = sides(child.triangle);
            for (std::size_t i = 0; i < 3; ++i) {
                auto [it, inserted] = colors.emplace(ss[i], child.colors[i]);
                if (!inserted && it->second != child.colors[i]) {
                    std::ostringstream msg;
                    msg << "adjacent tiles disagree on segment " << ss[i];
                    throw SeamConflict(msg.str());
                }
            }
        }
    }
    PatternPatch out;
    out.region = TriangleRegion{big};
    out.sequence = p.sequence;
    for (const auto& [s, c] : colors) {
        if (on_boundary(big, s)) out.boundary.emplace_hint(out.boundary.end(), s, c);
        else out.interior.emplace_hint(out.interior.end(), s, c);
    }
    return out;
}

/// F_{w1} o ... o F_{wk} applied n times to a seed (rightmost rule first),
/// then translated onto the side-2^(k n) triangle centered at O. The seed
/// orientation must match that triangle (positive for even k n).
inline PatternPatch compose(const std::vector<SubRule>& word, int n, const TriangleColoring& seed) {
    const TriangleId start =
        seed.orientation == Orientation::positive ? kT0 : unit_triangle(Orientation::negative, 0, 0);
    PatternPatch p = seed_patch({start, seed.colors});
    for (int rep = 0; rep < n; ++rep)
        for (auto it = word.rbegin(); it != word.rend(); ++it) p = apply_rule_patch(*it, p);
    const int level = static_cast<int>(word.size()) * n;
    const TriangleId target = centered_triangle(level);
    const TriangleId current = std::get<TriangleRegion>(p.region).triangle;
    if (current.orientation() != target.orientation())
        throw OrientationMismatch("seed orientation does not match the side-2^" + std::to_string(level) +
                                  " centered triangle");
    p = translate(p, (current.v[2] - target.v[2]) / 3, (current.v[0] - target.v[0]) / 3);
    std::string label;
    for (SubRule r : word) label += r == SubRule::plus ? '+' : '-';
    p.sequence = label + "^" + std::to_string(n);
    return p;
}

inline std::vector<SubRule> rules_for(const FoldWord& word) {
    std::vector<SubRule> out;
    for (FoldDirection f : word) out.push_back(rule_for(f));
    return out;
}

/// The finite pattern of `word` built by substitution: the all-red seed,
/// positive for even length and negative for odd length.
inline PatternPatch substitution_pattern(const FoldWord& word) {
    const Orientation o = word.size() % 2 == 0 ? Orientation::positive : Orientation::negative;
    PatternPatch p = compose(rules_for(word), 1, {o, {Color::red, Color::red, Color::red}});
    p.sequence = to_string(word);
    return p;
}

} // namespace trifold
