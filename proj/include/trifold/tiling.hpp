#pragma once

// Folding tilings: each unit triangle labelled by its number of red sides,
// optionally decorated with the slot of its minority-color side, and the
// local reconstruction of the segment coloring from the undecorated labels.

#include "trifold/errors.hpp"
#include "trifold/lattice.hpp"
#include "trifold/pattern.hpp"

#include <array>
#include <deque>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace trifold {

struct DecoratedTile {
    TriangleId triangle;
    int red_count = 0;
    std::optional<int> decoration;   // slot 1..3 of the minority side

    friend bool operator==(const DecoratedTile&, const DecoratedTile&) = default;
};

struct UndecoratedTile {
    TriangleId triangle;
    int red_count = 0;

    friend bool operator==(const UndecoratedTile&, const UndecoratedTile&) = default;
};

inline DecoratedTile decorate(const TriangleId& t, const std::array<Color, 3>& colors) {
    DecoratedTile tile{t, 0, std::nullopt};
    for (Color c : colors) tile.red_count += c == Color::red;
    if (tile.red_count == 1 || tile.red_count == 2) {
        const Color minority = tile.red_count == 1 ? Color::red : Color::blue;
        for (int s = 0; s < 3; ++s)
            if (colors[static_cast<std::size_t>(s)] == minority) tile.decoration = s + 1;
    }
    return tile;
}

/// Every unit triangle of the patch whose three sides are colored, sorted.
inline std::vector<DecoratedTile> to_tiling(const PatternPatch& p) {
    std::vector<DecoratedTile> out;
    for (const TriangleId& t : touched_unit_triangles(p))
        if (const auto c = p.side_colors(t)) out.push_back(decorate(t, *c));
    return out;
}

inline std::vector<UndecoratedTile> strip_decoration(const std::vector<DecoratedTile>& tiles) {
    std::vector<UndecoratedTile> out;
    out.reserve(tiles.size());
    for (const auto& t : tiles) out.push_back({t.triangle, t.red_count});
    return out;
}

/// Translation type of a decorated tile: orientation, red count, decoration.
struct DecoratedType {
    Orientation orientation = Orientation::positive;
    int red_count = 0;
    int decoration = 0;   // 0 when absent

    friend auto operator<=>(const DecoratedType&, const DecoratedType&) = default;
};

inline DecoratedType decorated_type(const DecoratedTile& t) {
    return {t.triangle.orientation(), t.red_count, t.decoration.value_or(0)};
}

struct Reconstruction {
    std::map<SegmentId, Color> colors;   // every segment of the eroded window
    std::array<Int, 3> layer_one_residue{};   // f_d mod 6 of the layer-1 lines
};

namespace detail {

inline Int position_on_line(const SegmentId& s) { return s.d == 3 ? s.q : s.p; }

inline SegmentId segment_at(const LineId& line, Int pos) {
    // Inverts position_on_line for a segment on `line`.
    switch (line.d) {
    case 1: return {1, pos, (1 - line.v) / 3};
    case 2: return {2, pos, (line.v + 2) / 3 - pos};
    default: return {3, (1 - line.v) / 3, pos};
    }
}

class Reconstructor {
public:
    Reconstructor(const std::vector<UndecoratedTile>& tiles, int margin) : margin_(margin) {
        for (const auto& t : tiles) {
            if (t.triangle.side() != 1 || !is_valid_triangle(t.triangle)) throw Error("tiles must be unit triangles");
            if (t.red_count < 0 || t.red_count > 3) throw Inconsistent("red count out of range");
            if (!red_.emplace(t.triangle, t.red_count).second) throw Inconsistent("duplicate tile");
            for (const SegmentId& s : sides(t.triangle)) window_.insert(s);
        }
    }

    Reconstruction run() {
        monochrome_tiles();
        Reconstruction r;
        for (int d = 1; d <= 3; ++d) r.layer_one_residue[static_cast<std::size_t>(d - 1)] = layer_one_residue(d);
        const Int sum = r.layer_one_residue[0] + r.layer_one_residue[1] + r.layer_one_residue[2];
        if (floor_mod(sum, 6) != 3) throw Inconsistent("layer-1 line families do not form hexagons");
        residue_ = r.layer_one_residue;
        alternate_layer_one();
        hexagons();
        check_counts();
        r.colors = eroded();
        return r;
    }

private:
    void set(const SegmentId& s, Color c) {
        auto [it, inserted] = known_.emplace(s, c);
        if (!inserted && it->second != c) {
            std::ostringstream msg;
            msg << "conflicting colors for segment " << s;
            throw Inconsistent(msg.str());
        }
    }

    std::optional<Color> known(const SegmentId& s) const {
        auto it = known_.find(s);
        if (it == known_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<int> red_count(const TriangleId& t) const {
        auto it = red_.find(t);
        if (it == red_.end()) return std::nullopt;
        return it->second;
    }

    void monochrome_tiles() {
        for (const auto& [t, n] : red_)
            if (n == 0 || n == 3)
                for (const SegmentId& s : sides(t)) set(s, n == 3 ? Color::red : Color::blue);
    }

    // Layer-1 lines alternate colors segment by segment; every other line
    // has monochrome blocks of length >= 2. Each observed triple or pair
    // votes for the residue class mod 6 of the layer-1 family.
    Int layer_one_residue(int d) const {
        std::map<Int, std::map<Int, Color>> lines;
        for (const auto& [s, c] : known_)
            if (s.d == d) lines[line_of(s).v][position_on_line(s)] = c;
        bool is_l1[2] = {false, false};    // indexed by residue 1 -> 0, 4 -> 1
        bool not_l1[2] = {false, false};
        for (const auto& [v, segs] : lines) {
            const int cls = floor_mod(v, 6) == 1 ? 0 : 1;
            for (auto it = segs.begin(); it != segs.end(); ++it) {
                auto next = std::next(it);
                if (next == segs.end() || next->first != it->first + 1) continue;
                if (next->second == it->second) {
                    not_l1[cls] = true;
                    continue;
                }
                auto third = std::next(next);
                if (third != segs.end() && third->first == next->first + 1 && third->second == it->second)
                    is_l1[cls] = true;
            }
        }
        const bool one = is_l1[0] || not_l1[1];
        const bool four = is_l1[1] || not_l1[0];
        if (one && four) throw Inconsistent("no consistent layer-1 lines in direction " + std::to_string(d));
        if (!one && !four) throw Undecidable("window too small to locate layer-1 lines");
        return one ? 1 : 4;
    }

    bool is_layer_one(const LineId& line) const {
        return floor_mod(line.v, 6) == residue_[static_cast<std::size_t>(line.d - 1)];
    }

    void alternate_layer_one() {
        std::map<LineId, std::vector<Int>> positions;
        for (const SegmentId& s : window_)
            if (is_layer_one(line_of(s))) positions[line_of(s)].push_back(position_on_line(s));
        for (const auto& [line, ps] : positions) {
            std::optional<std::pair<Int, Color>> ref;
            for (Int pos : ps)
                if (auto c = known(segment_at(line, pos))) {
                    ref = std::make_pair(pos, *c);
                    break;
                }
            if (!ref) continue;
            for (Int pos : ps) {
                const Color c = floor_mod(pos - ref->first, 2) == 0 ? ref->second : swapped(ref->second);
                set(segment_at(line, pos), c);
            }
        }
    }

    // Around a hexagon center the six tiles each have one known outer side
    // and two spokes. A tile needing 0 or 2 red spokes fixes both; walking
    // around the center then forces every other spoke.
    void hexagons() {
        std::set<Vertex> centers;
        for (const auto& [t, n] : red_)
            for (const Vertex& x : vertices(t)) {
                bool center = true;
                for (int d = 1; d <= 3; ++d) center = center && !is_layer_one({d, x.f(d)});
                if (center) centers.insert(x);
            }
        for (const Vertex& c : centers) solve_hexagon(c);
    }

    void solve_hexagon(const Vertex& c) {
        std::array<SegmentId, 6> spokes;
        std::array<int, 6> need{};
        for (std::size_t i = 0; i < 6; ++i) {
            const Vertex a = c + kStarOffsets[i], b = c + kStarOffsets[(i + 1) % 6];
            spokes[i] = segment_between(c, a);
            const auto n = red_count(triangle_from_vertices(c, a, b));
            const auto outer = known(segment_between(a, b));
            if (!n || !outer) return;
            need[i] = *n - (*outer == Color::red ? 1 : 0);
            if (need[i] < 0 || need[i] > 2) throw Inconsistent("tile red count disagrees with its outer side");
        }
        std::size_t anchor = 6;
        for (std::size_t i = 0; i < 6 && anchor == 6; ++i)
            if (need[i] != 1) anchor = i;
        if (anchor == 6) throw Inconsistent("hexagon spokes alternate, which no folding pattern allows");
        std::array<int, 6> red{};
        red[anchor] = need[anchor] / 2;
        for (std::size_t step = 0; step < 6; ++step) {
            const std::size_t i = (anchor + step) % 6, j = (i + 1) % 6;
            const int next = need[i] - red[i];
            if (next < 0 || next > 1) throw Inconsistent("hexagon spoke propagation fails");
            if (step == 5) {
                if (next != red[j]) throw Inconsistent("hexagon spokes do not close up");
            } else {
                red[j] = next;
            }
        }
        for (std::size_t i = 0; i < 6; ++i) set(spokes[i], red[i] ? Color::red : Color::blue);
    }

    void check_counts() const {
        for (const auto& [t, n] : red_) {
            int reds = 0;
            bool complete = true;
            for (const SegmentId& s : sides(t)) {
                const auto c = known(s);
                if (!c) complete = false;
                else reds += *c == Color::red;
            }
            if (complete && reds != n) {
                std::ostringstream msg;
                msg << "tile " << t << " has red count " << n << " but its sides give " << reds;
                throw Inconsistent(msg.str());
            }
        }
    }

    std::map<SegmentId, Color> eroded() const {
        std::map<Vertex, int> depth;
        std::deque<Vertex> queue;
        for (const auto& [t, n] : red_)
            for (const Vertex& x : vertices(t)) depth.emplace(x, -1);
        for (auto& [x, dpt] : depth) {
            bool full = true;
            for (std::size_t i = 0; i < 6 && full; ++i)
                full = red_.contains(triangle_from_vertices(x, x + kStarOffsets[i], x + kStarOffsets[(i + 1) % 6]));
            if (!full) {
                dpt = 0;
                queue.push_back(x);
            }
        }
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            for (const Vertex& off : kStarOffsets) {
                auto it = depth.find(x + off);
                if (it != depth.end() && it->second < 0) {
                    it->second = depth[x] + 1;
                    queue.push_back(it->first);
                }
            }
        }
        std::map<SegmentId, Color> out;
        for (const SegmentId& s : window_) {
            const auto [a, b] = s.endpoints();
            if (depth.at(a) < margin_ || depth.at(b) < margin_) continue;
            const auto c = known(s);
            if (!c) {
                std::ostringstream msg;
                msg << "segment " << s << " is not determined by the window";
                throw Undecidable(msg.str());
            }
            out.emplace_hint(out.end(), s, *c);
        }
        return out;
    }

    int margin_;
    std::map<TriangleId, int> red_;
    std::set<SegmentId> window_;
    std::map<SegmentId, Color> known_;
    std::array<Int, 3> residue_{};
};

} // namespace detail

/// Recovers the segment coloring from red counts alone, on the segments
/// whose endpoints lie at least `margin` steps inside the window.
inline Reconstruction reconstruct(const std::vector<UndecoratedTile>& tiles, int margin = 4) {
    if (margin < 0) throw Error("negative erosion margin");
    return detail::Reconstructor(tiles, margin).run();
}

} // namespace trifold
