#pragma once

// Folding sequences and the closed-form coloring: the layer of a segment
// selects one fold a_k, and the orientation of the enclosing layer
// triangle together with the parity of k decides red or blue.

#include "trifold/errors.hpp"
#include "trifold/lattice.hpp"
#include "trifold/pattern.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace trifold {

/// up ("+") produces valleys, down ("-") produces peaks.
enum class FoldDirection : std::uint8_t { up, down };

constexpr char to_char(FoldDirection f) { return f == FoldDirection::up ? '+' : '-'; }

constexpr FoldDirection opposite(FoldDirection f) {
    return f == FoldDirection::up ? FoldDirection::down : FoldDirection::up;
}

using FoldWord = std::vector<FoldDirection>;

inline FoldWord parse_word(std::string_view text) {
    FoldWord out;
    for (char c : text) {
        if (c == '+') out.push_back(FoldDirection::up);
        else if (c == '-') out.push_back(FoldDirection::down);
        else throw Error(std::string("invalid fold symbol '") + c + "'");
    }
    return out;
}

inline std::string to_string(const FoldWord& w) {
    std::string s;
    for (FoldDirection f : w) s += to_char(f);
    return s;
}

/// A folding sequence a_1, a_2, ... (1-based). Either a finite word, an
/// eventually periodic word prefix(period)*, or a caller-supplied function.
class FoldingSequence {
public:
    enum class Kind { finite, periodic, generated };

    static FoldingSequence finite(FoldWord word) {
        if (word.empty()) throw Error("empty folding sequence");
        FoldingSequence s;
        s.kind_ = Kind::finite;
        s.prefix_ = std::move(word);
        return s;
    }

    static FoldingSequence periodic(FoldWord period, FoldWord prefix = {}) {
        if (period.empty()) throw Error("empty period");
        FoldingSequence s;
        s.kind_ = Kind::periodic;
        s.prefix_ = std::move(prefix);
        s.period_ = std::move(period);
        return s;
    }

    static FoldingSequence generated(std::function<FoldDirection(int)> fn, std::string label) {
        FoldingSequence s;
        s.kind_ = Kind::generated;
        s.fn_ = std::move(fn);
        s.label_ = std::move(label);
        return s;
    }

    /// "+-+" (finite), "(+-)*" (periodic), "+-(+)*" (prefix then periodic).
    static FoldingSequence parse(std::string_view text) {
        const auto open = text.find('(');
        if (open == std::string_view::npos) return finite(parse_word(text));
        if (text.size() < open + 3 || text.substr(text.size() - 2) != ")*")
            throw Error("periodic sequences are written prefix(period)*");
        return periodic(parse_word(text.substr(open + 1, text.size() - open - 3)),
                        parse_word(text.substr(0, open)));
    }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }

    /// Number of specified terms for finite sequences.
    int length() const { return static_cast<int>(prefix_.size()); }

    const FoldWord& prefix() const { return prefix_; }
    const FoldWord& period() const { return period_; }

    /// a_k, or nullopt past the end of a finite sequence.
    std::optional<FoldDirection> at(int k) const {
        if (k < 1) throw Error("fold index starts at 1");
        const auto idx = static_cast<std::size_t>(k - 1);
        switch (kind_) {
        case Kind::finite:
            if (idx < prefix_.size()) return prefix_[idx];
            return std::nullopt;
        case Kind::periodic:
            if (idx < prefix_.size()) return prefix_[idx];
            return period_[(idx - prefix_.size()) % period_.size()];
        default: return fn_(k);
        }
    }

    /// First n terms.
    FoldWord take(int n) const {
        FoldWord out;
        for (int k = 1; k <= n; ++k) {
            auto a = at(k);
            if (!a) throw OutOfRegion("sequence has only " + std::to_string(length()) + " terms");
            out.push_back(*a);
        }
        return out;
    }

    std::string to_string() const {
        switch (kind_) {
        case Kind::finite: return trifold::to_string(prefix_);
        case Kind::periodic: return trifold::to_string(prefix_) + "(" + trifold::to_string(period_) + ")*";
        default: return label_;
        }
    }

private:
    Kind kind_ = Kind::finite;
    FoldWord prefix_;
    FoldWord period_;
    std::function<FoldDirection(int)> fn_;
    std::string label_;
};

/// Color of a layer-k segment given the orientation of its layer triangle.
constexpr Color layer_color(int k, Orientation o, FoldDirection a) {
    const bool odd = (k % 2) == 1;
    const bool up = a == FoldDirection::up;
    const bool red = (o == Orientation::positive) == (odd == up);
    return red ? Color::red : Color::blue;
}

/// Color of any grid segment in the infinite pattern of `seq`. For finite
/// sequences the segment must be interior to the side-2^n pattern triangle.
inline Color color_of_segment(const FoldingSequence& seq, const SegmentId& seg) {
    if (seq.is_finite()) {
        const TriangleId big = centered_triangle(seq.length());
        if (!contains(big, seg) || on_boundary(big, seg))
            throw OutOfRegion("segment outside the side-2^" + std::to_string(seq.length()) + " pattern");
    }
    const int k = layer_of(seg);
    const auto a = seq.at(k);
    if (!a) throw OutOfRegion("layer " + std::to_string(k) + " is not specified");
    return layer_color(k, layer_triangle_orientation(seg), *a);
}

namespace detail {

inline std::vector<std::optional<Color>> colors_parallel(const FoldingSequence& seq,
                                                         const std::vector<SegmentId>& segs,
                                                         bool allow_missing, unsigned threads) {
    std::vector<std::optional<Color>> out(segs.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const int k = layer_of(segs[i]);
            const auto a = seq.at(k);
            if (!a) {
                if (!allow_missing) throw OutOfRegion("layer " + std::to_string(k) + " is not specified");
                continue;
            }
            out[i] = layer_color(k, layer_triangle_orientation(segs[i]), *a);
        }
    };
    threads = std::max(1u, threads);
    if (threads == 1 || segs.size() < 1024) {
        work(0, segs.size());
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const std::size_t chunk = (segs.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t b = std::min(segs.size(), t * chunk), e = std::min(segs.size(), b + chunk);
        pool.emplace_back([&, b, e, t] {
            try {
                work(b, e);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
    return out;
}

} // namespace detail

/// The pattern inside the side-2^k triangle centered at O. Boundary segments
/// are colored when the sequence specifies layer k+1.
inline PatternPatch patch(const FoldingSequence& seq, int k, unsigned threads = 1) {
    if (seq.is_finite() && k > seq.length())
        throw OutOfRegion("patch level exceeds sequence length");
    const TriangleId big = centered_triangle(k);
    const RegionSegments segs = segments_in_triangle(big);
    PatternPatch out;
    out.region = TriangleRegion{big};
    out.sequence = seq.to_string();
    const auto inner = detail::colors_parallel(seq, segs.interior, false, threads);
    for (std::size_t i = 0; i < segs.interior.size(); ++i)
        out.interior.emplace_hint(out.interior.end(), segs.interior[i], *inner[i]);
    const auto outer = detail::colors_parallel(seq, segs.boundary, true, threads);
    for (std::size_t i = 0; i < segs.boundary.size(); ++i)
        out.boundary.emplace(segs.boundary[i], outer[i]);
    return out;
}

/// The pattern on all segments within distance R of O.
inline PatternPatch ball_patch(const FoldingSequence& seq, Int radius, unsigned threads = 1) {
    auto segs = segments_in_ball(radius);
    std::sort(segs.begin(), segs.end());
    PatternPatch out;
    out.region = BallRegion{radius};
    out.sequence = seq.to_string();
    if (seq.is_finite()) {
        const TriangleId big = centered_triangle(seq.length());
        for (const auto& s : segs)
            if (!contains(big, s) || on_boundary(big, s))
                throw OutOfRegion("ball exceeds the finite pattern triangle");
    }
    const auto colors = detail::colors_parallel(seq, segs, false, threads);
    for (std::size_t i = 0; i < segs.size(); ++i) out.interior.emplace_hint(out.interior.end(), segs[i], *colors[i]);
    return out;
}

/// True iff two eventually periodic sequences have the same infinite tail.
inline bool same_tail(const FoldingSequence& s, const FoldingSequence& r) {
    const int start = static_cast<int>(std::max(s.prefix().size(), r.prefix().size())) + 1;
    const auto span = static_cast<int>(std::lcm(s.period().size(), r.period().size()));
    for (int k = start; k < start + span; ++k)
        if (*s.at(k) != *r.at(k)) return false;
    return true;
}

/// Recolors a pattern of `from` into the pattern of `to` by flipping every
/// segment whose layer k has a_k != b_k.
inline PatternPatch recolor(const PatternPatch& p, const FoldingSequence& from, const FoldingSequence& to) {
    using K = FoldingSequence::Kind;
    if (from.kind() == K::periodic && to.kind() == K::periodic && !same_tail(from, to))
        throw IncompatibleSequences(from.to_string() + " and " + to.to_string() + " differ infinitely often");
    auto flip = [&](const SegmentId& seg, Color c) {
        const int k = layer_of(seg);
        const auto a = from.at(k), b = to.at(k);
        if (!a || !b) throw OutOfRegion("layer " + std::to_string(k) + " is not specified");
        return *a == *b ? c : swapped(c);
    };
    PatternPatch out;
    out.region = p.region;
    out.sequence = to.to_string();
    for (const auto& [seg, c] : p.interior) out.interior.emplace_hint(out.interior.end(), seg, flip(seg, c));
    for (const auto& [seg, c] : p.boundary) {
        std::optional<Color> nc;
        if (c) {
            const int k = layer_of(seg);
            if (from.at(k) && to.at(k)) nc = flip(seg, *c);
        }
        out.boundary.emplace_hint(out.boundary.end(), seg, nc);
    }
    return out;
}

} // namespace trifold
