#pragma once

// Exact integer model of the triangular grid.
//
// A grid vertex v(p,q) sits at p*u + q*w + v0 with u = (1,0),
// w = (1/2, sqrt(3)/2) and v0 = (-1/2, -sqrt(3)/6), so the positive unit
// triangle T0 = {v(0,0), v(1,0), v(0,1)} is centered at the origin O.
// The three line functionals
//
//     f1 = 1 - 3q,   f2 = 3p + 3q - 2,   f3 = 1 - 3p
//
// are integers, sum to zero and are always 1 mod 3. Every grid line is a
// level set {f_d = v} with v = 1 (mod 3).

#include "trifold/errors.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace trifold {

using Int = std::int64_t;

constexpr Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr Int floor_mod(Int a, Int b) { return a - b * floor_div(a, b); }

/// 2-adic valuation of a nonzero integer (sign ignored).
constexpr int nu2(Int v) {
    if (v == 0) throw Error("nu2 of zero");
    int n = 0;
    while ((v & 1) == 0) {
        v /= 2;
        ++n;
    }
    return n;
}

constexpr Int pow_int(Int base, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

enum class Orientation : std::uint8_t { positive, negative };

constexpr Orientation flipped(Orientation o) {
    return o == Orientation::positive ? Orientation::negative : Orientation::positive;
}

inline const char* to_string(Orientation o) {
    return o == Orientation::positive ? "positive" : "negative";
}

struct Vertex {
    Int p = 0;
    Int q = 0;

    constexpr Int f1() const { return 1 - 3 * q; }
    constexpr Int f2() const { return 3 * p + 3 * q - 2; }
    constexpr Int f3() const { return 1 - 3 * p; }

    /// f_d for d in {1,2,3}.
    constexpr Int f(int d) const {
        switch (d) {
        case 1: return f1();
        case 2: return f2();
        default: return f3();
        }
    }

    constexpr Vertex operator+(Vertex o) const { return {p + o.p, q + o.q}; }
    constexpr Vertex operator-(Vertex o) const { return {p - o.p, q - o.q}; }

    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Inverse of the functional map; f1 and f3 must be 1 mod 3.
constexpr Vertex vertex_from_functionals(Int f1, Int f3) {
    if (floor_mod(f1, 3) != 1 || floor_mod(f3, 3) != 1)
        throw Error("functional values are not 1 mod 3");
    return {(1 - f3) / 3, (1 - f1) / 3};
}

/// The six neighbor offsets around a vertex in counterclockwise order,
/// starting at +u (angle 0).
inline constexpr std::array<Vertex, 6> kStarOffsets = {
    Vertex{1, 0}, Vertex{0, 1}, Vertex{-1, 1}, Vertex{-1, 0}, Vertex{0, -1}, Vertex{1, -1}};

/// A unit segment of the grid. Canonical anchors:
///   d = 1 joins v(p,q), v(p+1,q)
///   d = 2 joins v(p,q), v(p+1,q-1)
///   d = 3 joins v(p,q), v(p,q+1)
struct SegmentId {
    int d = 1;
    Int p = 0;
    Int q = 0;

    constexpr std::pair<Vertex, Vertex> endpoints() const {
        switch (d) {
        case 1: return {{p, q}, {p + 1, q}};
        case 2: return {{p, q}, {p + 1, q - 1}};
        default: return {{p, q}, {p, q + 1}};
        }
    }

    /// Twice the functional f_j evaluated at the midpoint.
    constexpr Int doubled_midpoint(int j) const {
        auto [a, b] = endpoints();
        return a.f(j) + b.f(j);
    }

    constexpr SegmentId translated(Int dp, Int dq) const { return {d, p + dp, q + dq}; }

    friend constexpr auto operator<=>(const SegmentId&, const SegmentId&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const SegmentId& s) {
    return os << '(' << s.d << ',' << s.p << ',' << s.q << ')';
}

/// Canonical id of the unit segment joining two adjacent vertices.
constexpr SegmentId segment_between(Vertex a, Vertex b) {
    if (b < a) std::swap(a, b);
    const Vertex delta = b - a;
    if (delta == Vertex{1, 0}) return {1, a.p, a.q};
    if (delta == Vertex{0, 1}) return {3, a.p, a.q};
    if (delta == Vertex{1, -1}) return {2, a.p, a.q};
    throw Error("vertices are not adjacent");
}

struct LineId {
    int d = 1;
    Int v = 1;

    friend constexpr auto operator<=>(const LineId&, const LineId&) = default;
};

constexpr LineId line_of(const SegmentId& seg) { return {seg.d, seg.endpoints().first.f(seg.d)}; }

/// Layer index k of a line value: nu2(v) + 1.
constexpr int layer_of_value(Int v) { return nu2(v) + 1; }

constexpr int layer_of(const SegmentId& seg) { return layer_of_value(line_of(seg).v); }

/// Grid triangle stored by its side-line values (v1, v2, v3); side slot i lies
/// on a direction-i line. Positive triangles are {f_i <= v_i} with
/// v1+v2+v3 = 3s, negative ones {f_i >= v_i} with v1+v2+v3 = -3s.
struct TriangleId {
    std::array<Int, 3> v{1, 1, 1};

    constexpr Int sum() const { return v[0] + v[1] + v[2]; }
    constexpr Int side() const { return (sum() < 0 ? -sum() : sum()) / 3; }
    constexpr Orientation orientation() const {
        return sum() > 0 ? Orientation::positive : Orientation::negative;
    }
    constexpr Int value(int slot) const { return v[static_cast<std::size_t>(slot - 1)]; }

    friend constexpr auto operator<=>(const TriangleId&, const TriangleId&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const TriangleId& t) {
    return os << '[' << t.v[0] << ',' << t.v[1] << ',' << t.v[2] << ']';
}

constexpr bool is_valid_triangle(const TriangleId& t) {
    for (Int x : t.v)
        if (floor_mod(x, 3) != 1) return false;
    return t.sum() != 0 && t.sum() % 3 == 0;
}

/// T0, the positive unit triangle centered at the origin.
inline constexpr TriangleId kT0{{1, 1, 1}};

/// The side-2^k triangle centered at O, i.e. the (-2)^k dilation of T0.
/// Positive iff k is even.
constexpr TriangleId centered_triangle(int k) {
    const Int v = pow_int(-2, k);
    return {{v, v, v}};
}

/// Vertices of a triangle; entry i is the vertex opposite side slot i+1.
constexpr std::array<Vertex, 3> vertices(const TriangleId& t) {
    const auto& v = t.v;
    // Opposite slot 1: f2 = v2, f3 = v3.
    return {vertex_from_functionals(-v[1] - v[2], v[2]),
            vertex_from_functionals(v[0], v[2]),
            vertex_from_functionals(v[0], -v[0] - v[1])};
}

constexpr TriangleId triangle_from_vertices(Vertex a, Vertex b, Vertex c) {
    TriangleId t;
    for (int d = 1; d <= 3; ++d) {
        Int val;
        if (a.f(d) == b.f(d)) val = a.f(d);
        else if (a.f(d) == c.f(d)) val = a.f(d);
        else if (b.f(d) == c.f(d)) val = b.f(d);
        else throw Error("vertices do not form a grid triangle");
        t.v[static_cast<std::size_t>(d - 1)] = val;
    }
    if (t.sum() == 0) throw Error("degenerate triangle");
    return t;
}

/// Unit triangles addressed by the rhombus cell (p,q): the positive one has
/// vertices v(p,q), v(p+1,q), v(p,q+1); the negative one v(p+1,q), v(p,q+1),
/// v(p+1,q+1).
constexpr TriangleId unit_triangle(Orientation o, Int p, Int q) {
    if (o == Orientation::positive) return {{1 - 3 * q, 3 * p + 3 * q + 1, 1 - 3 * p}};
    return {{-2 - 3 * q, 3 * p + 3 * q + 1, -2 - 3 * p}};
}

struct UnitAnchor {
    Orientation orientation = Orientation::positive;
    Int p = 0;
    Int q = 0;

    friend constexpr auto operator<=>(const UnitAnchor&, const UnitAnchor&) = default;
};

constexpr UnitAnchor anchor_of(const TriangleId& t) {
    if (t.side() != 1) throw Error("anchor_of expects a unit triangle");
    if (t.orientation() == Orientation::positive)
        return {Orientation::positive, (1 - t.v[2]) / 3, (1 - t.v[0]) / 3};
    return {Orientation::negative, (-2 - t.v[2]) / 3, (-2 - t.v[0]) / 3};
}

/// Sides of a unit triangle indexed by slot (entry i is side slot i+1).
constexpr std::array<SegmentId, 3> sides(const TriangleId& t) {
    const UnitAnchor a = anchor_of(t);
    if (a.orientation == Orientation::positive)
        return {SegmentId{1, a.p, a.q}, SegmentId{2, a.p, a.q + 1}, SegmentId{3, a.p, a.q}};
    return {SegmentId{1, a.p, a.q + 1}, SegmentId{2, a.p, a.q + 1}, SegmentId{3, a.p + 1, a.q}};
}

/// The two unit triangles having `seg` as a side: {positive, negative}.
constexpr std::pair<TriangleId, TriangleId> adjacent_unit_triangles(const SegmentId& seg) {
    auto [a, b] = seg.endpoints();
    TriangleId pos, neg;
    for (int j = 1; j <= 3; ++j) {
        const auto i = static_cast<std::size_t>(j - 1);
        pos.v[i] = std::max(a.f(j), b.f(j));
        neg.v[i] = std::min(a.f(j), b.f(j));
    }
    return {pos, neg};
}

constexpr bool contains(const TriangleId& big, Vertex x) {
    for (int d = 1; d <= 3; ++d) {
        const Int bound = big.value(d);
        if (big.orientation() == Orientation::positive ? x.f(d) > bound : x.f(d) < bound)
            return false;
    }
    return true;
}

constexpr bool contains(const TriangleId& big, const SegmentId& seg) {
    auto [a, b] = seg.endpoints();
    return contains(big, a) && contains(big, b);
}

constexpr bool contains(const TriangleId& big, const TriangleId& small) {
    for (Vertex x : vertices(small))
        if (!contains(big, x)) return false;
    return true;
}

/// True iff `seg` lies on one of the sides of `big` (and inside it).
constexpr bool on_boundary(const TriangleId& big, const SegmentId& seg) {
    return contains(big, seg) && line_of(seg).v == big.value(seg.d);
}

/// Exact distance test |x|^2 <= R^2 for a vertex position.
constexpr bool in_ball(Vertex x, Int radius) {
    const Int a = 6 * x.p + 3 * x.q - 3;
    const Int b = 3 * x.q - 1;
    return a * a + 3 * b * b <= 36 * radius * radius;
}

struct RegionSegments {
    std::vector<SegmentId> interior;
    std::vector<SegmentId> boundary;
};

/// All unit segments inside a grid triangle, sorted; segments lying on its
/// sides are reported separately.
inline RegionSegments segments_in_triangle(const TriangleId& big) {
    Int lo[3], hi[3];
    const Int s3 = 3 * big.side();
    for (int i = 0; i < 3; ++i) {
        if (big.orientation() == Orientation::positive) {
            lo[i] = big.v[static_cast<std::size_t>(i)] - s3;
            hi[i] = big.v[static_cast<std::size_t>(i)];
        } else {
            lo[i] = big.v[static_cast<std::size_t>(i)];
            hi[i] = big.v[static_cast<std::size_t>(i)] + s3;
        }
    }
    const Int pmin = floor_div(1 - hi[2], 3), pmax = floor_div(1 - lo[2], 3) + 1;
    const Int qmin = floor_div(1 - hi[0], 3), qmax = floor_div(1 - lo[0], 3) + 1;
    RegionSegments out;
    for (int d = 1; d <= 3; ++d) {
        for (Int p = pmin; p <= pmax; ++p) {
            for (Int q = qmin; q <= qmax; ++q) {
                const SegmentId seg{d, p, q};
                if (!contains(big, seg)) continue;
                if (line_of(seg).v == big.value(d)) out.boundary.push_back(seg);
                else out.interior.push_back(seg);
            }
        }
    }
    return out;
}

/// Unit segments with both endpoints in the closed radius-R ball about O.
inline std::vector<SegmentId> segments_in_ball(Int radius) {
    std::vector<SegmentId> out;
    const Int span = 2 * radius + 2;
    for (int d = 1; d <= 3; ++d) {
        for (Int p = -span; p <= span; ++p) {
            for (Int q = -span; q <= span; ++q) {
                const SegmentId seg{d, p, q};
                auto [a, b] = seg.endpoints();
                if (in_ball(a, radius) && in_ball(b, radius)) out.push_back(seg);
            }
        }
    }
    return out;
}

/// Unit triangles contained in a grid triangle, sorted.
inline std::vector<TriangleId> unit_triangles_in(const TriangleId& big) {
    const auto corners = vertices(big);
    Int pmin = corners[0].p, pmax = pmin, qmin = corners[0].q, qmax = qmin;
    for (const Vertex& c : corners) {
        pmin = std::min(pmin, c.p);
        pmax = std::max(pmax, c.p);
        qmin = std::min(qmin, c.q);
        qmax = std::max(qmax, c.q);
    }
    std::vector<TriangleId> out;
    for (Int p = pmin - 1; p <= pmax; ++p) {
        for (Int q = qmin - 1; q <= qmax; ++q) {
            for (Orientation o : {Orientation::positive, Orientation::negative}) {
                const TriangleId t = unit_triangle(o, p, q);
                if (contains(big, t)) out.push_back(t);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Mirror image of a vertex in a grid line. Reflecting in {f_d = V} sends
/// f_d to 2V - f_d and exchanges the other two functionals as
/// f_j -> -V - f_k.
constexpr Vertex reflect(Vertex x, LineId mirror) {
    Int f[3] = {x.f1(), x.f2(), x.f3()};
    const int d = mirror.d - 1;
    const int j = (d + 1) % 3, k = (d + 2) % 3;
    Int g[3];
    g[d] = 2 * mirror.v - f[d];
    g[j] = -mirror.v - f[k];
    g[k] = -mirror.v - f[j];
    return vertex_from_functionals(g[0], g[2]);
}

constexpr SegmentId reflect(const SegmentId& seg, LineId mirror) {
    auto [a, b] = seg.endpoints();
    return segment_between(reflect(a, mirror), reflect(b, mirror));
}

/// Mirror image of a whole line.
constexpr LineId reflect(LineId line, LineId mirror) {
    if (line.d == mirror.d) return {line.d, 2 * mirror.v - line.v};
    const int third = 6 - line.d - mirror.d;
    return {third, -mirror.v - line.v};
}

constexpr TriangleId reflect(const TriangleId& t, LineId mirror) {
    const auto vs = vertices(t);
    return triangle_from_vertices(reflect(vs[0], mirror), reflect(vs[1], mirror),
                                  reflect(vs[2], mirror));
}

/// Image of a line under the (-2)-dilation about O.
constexpr LineId dilate_minus_two(LineId line) { return {line.d, -2 * line.v}; }

/// Largest layer-k line value that is <= x/2 (x is a doubled functional
/// value that never coincides with a line).
constexpr Int layer_floor(int k, Int doubled_x) {
    const Int period = 3 * (Int{1} << k);
    const Int residue = pow_int(-2, k - 1);
    return residue + period * floor_div(floor_div(doubled_x, 2) - residue, period);
}

/// The layer-k triangle (side 2^(k-1)) that has `seg` on one of its sides,
/// k being the layer of the segment's line.
constexpr TriangleId layer_triangle(const SegmentId& seg) {
    const int k = layer_of(seg);
    if (k > 40) throw Error("layer index out of supported range");
    const Int v = line_of(seg).v;
    const Int half = Int{1} << (k - 1);
    const Int period = 3 * (Int{1} << k);
    TriangleId t;
    Int sigma = 0;
    for (int j = 1; j <= 3; ++j) {
        const auto i = static_cast<std::size_t>(j - 1);
        t.v[i] = (j == seg.d) ? v : layer_floor(k, seg.doubled_midpoint(j));
        sigma += t.v[i];
    }
    if (sigma == -3 * half) return t;
    if (sigma == -9 * half) {
        for (int j = 1; j <= 3; ++j)
            if (j != seg.d) t.v[static_cast<std::size_t>(j - 1)] += period;
        return t;
    }
    throw MalformedLayer("layer sum " + std::to_string(sigma) + " at layer " + std::to_string(k));
}

constexpr Orientation layer_triangle_orientation(const SegmentId& seg) {
    return layer_triangle(seg).orientation();
}

} // namespace trifold
