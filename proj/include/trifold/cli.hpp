#pragma once

// Command-line front end. Exit codes: 0 success, 1 property violation,
// 2 usage or input error.

#include "trifold/analysis.hpp"
#include "trifold/folding.hpp"
#include "trifold/io.hpp"
#include "trifold/render.hpp"
#include "trifold/spectral.hpp"
#include "trifold/substitution.hpp"
#include "trifold/tiling.hpp"
#include "trifold/unfold_sim.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace trifold::cli {

inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;

class UsageError : public Error {
public:
    using Error::Error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

inline bool is_tiling_text(const std::string& text) { return text.rfind("trifold-tiling", 0) == 0; }

inline std::string join(const std::vector<Rational>& v) {
    std::ostringstream ss;
    ss << '(';
    for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? ", " : "") << v[i];
    ss << ')';
    return ss.str();
}

struct Options {
    unsigned threads = 1;
    std::uint64_t rng_seed = 0;

    // generate / stars / period / verify
    std::string seq;
    int size = -1;
    long long radius = -1;
    std::string method = "closed";
    std::string out;
    std::string tiling_out;
    bool undecorated = false;

    // render
    std::string in;
    std::string svg;

    // matrix / spectrum / density
    std::string word;
    int power = 1;
    int steps = 8;
    int seed = 1;
    std::string mode = "prefix";
    bool check_envelope = false;

    // verify
    std::string methods = "closed,unfold,subst";
    int random_count = 0;
    int random_length = 6;

    // reconstruct
    std::string reference;
    int margin = 4;

    // period
    long long max_norm = 8;
    int layer = 0;
};

/// Pattern from --in, or generated from --seq with --size or --radius.
inline PatternPatch input_pattern(const Options& o) {
    if (!o.in.empty()) return pattern_from_string(read_file(o.in));
    if (o.seq.empty()) throw UsageError("give --in or --seq");
    const FoldingSequence s = FoldingSequence::parse(o.seq);
    if (o.radius >= 0) return ball_patch(s, o.radius, o.threads);
    const int size = o.size >= 0 ? o.size : (s.is_finite() ? s.length() : -1);
    if (size < 0) throw UsageError("infinite sequences need --size or --radius");
    return patch(s, size, o.threads);
}

inline PatternPatch generate_with(const std::string& method, const FoldingSequence& s, int size, unsigned threads) {
    if (method == "closed") return patch(s, size, threads);
    const FoldWord w = s.take(size);
    if (method == "unfold") return unfold_pattern(w);
    if (method == "subst") return substitution_pattern(w);
    throw UsageError("unknown method '" + method + "' (closed, unfold, subst)");
}

inline int cmd_generate(const Options& o, std::ostream& out) {
    if (o.seq.empty()) throw UsageError("generate needs --seq");
    const FoldingSequence s = FoldingSequence::parse(o.seq);
    PatternPatch p;
    if (o.radius >= 0) {
        if (o.method != "closed") throw UsageError("--radius only works with --method closed");
        p = ball_patch(s, o.radius, o.threads);
    } else {
        const int size = o.size >= 0 ? o.size : (s.is_finite() ? s.length() : -1);
        if (size < 0) throw UsageError("infinite sequences need --size or --radius");
        p = generate_with(o.method, s, size, o.threads);
        p.sequence = s.to_string();
    }
    write_output(o.out, pattern_to_string(p), out);
    if (!o.tiling_out.empty()) {
        std::ostringstream ts;
        const auto tiles = to_tiling(p);
        if (o.undecorated) write_tiling(ts, strip_decoration(tiles));
        else write_tiling(ts, tiles);
        write_output(o.tiling_out, ts.str(), out);
    }
    return kOk;
}

inline int cmd_render(const Options& o, std::ostream& out) {
    if (o.in.empty()) throw UsageError("render needs --in");
    const std::string text = read_file(o.in);
    const std::string svg = is_tiling_text(text) ? render_svg(tiling_from_string(text))
                                                 : render_svg(pattern_from_string(text));
    write_output(o.svg, svg, out);
    return kOk;
}

inline int cmd_matrix(const Options& o, std::ostream& out) {
    if (o.power < 0) throw UsageError("--power must be non-negative");
    out << power(word_matrix(parse_word(o.word)), o.power);
    return kOk;
}

inline int cmd_spectrum(const Options& o, std::ostream& out) {
    const EigenReport r = eigen_report(parse_word(o.word));
    auto yes = [](bool b) { return b ? "true" : "false"; };
    out << "word: " << r.word << '\n';
    out << "length: " << r.length << '\n';
    out << "eigenvalues:";
    for (const BigInt& d : r.diagonal) out << ' ' << d;
    out << '\n';
    for (auto it = r.algebraic.rbegin(); it != r.algebraic.rend(); ++it)
        out << "eigenvalue " << it->first << ": algebraic " << it->second << ", geometric " << r.geometric.at(it->first)
            << '\n';
    out << "lower_triangular: " << yes(r.triangular) << '\n';
    out << "diagonal_matches: " << yes(r.diagonal_as_expected) << '\n';
    out << "perron_vector: " << yes(r.perron_vector) << '\n';
    out << "unit_eigenvectors: " << yes(r.unit_vectors) << '\n';
    out << "kernel_vectors: " << yes(r.kernel_vectors) << '\n';
    out << "eigenspace_dimension_2^k: " << r.two_k_dimension << '\n';
    out << "primitive_exponent: ";
    if (r.primitive_exponent) out << *r.primitive_exponent << '\n';
    else out << "none\n";
    out << "invariant_subspaces: " << yes(invariant_subspaces_preserved()) << '\n';
    out << "diagonalizable: " << yes(r.diagonalizable) << '\n';
    return r.verified() ? kOk : kViolation;
}

inline int cmd_density(const Options& o, std::ostream& out) {
    const FoldWord w = parse_word(o.word);
    if (w.empty()) throw UsageError("--word must be nonempty");
    if (o.seed < 1 || o.seed > 8) throw UsageError("--seed is 1..8");
    if (o.steps < 0) throw UsageError("--steps must be non-negative");
    if (o.mode != "prefix" && o.mode != "repeat") throw UsageError("--mode is prefix or repeat");
    for (int n = 0; n <= o.steps; ++n) {
        const auto v = o.mode == "prefix" ? prefix_density(w, n, o.seed) : density_limit(w, n, o.seed);
        out << "n=" << n << " v=" << join(v) << " deviation=" << deviation(v) << '\n';
    }
    if (!o.check_envelope) return kOk;
    if (o.mode != "prefix") throw UsageError("--check-envelope uses --mode prefix");
    const EnvelopeResult e = density_envelope(w, o.seed, o.steps);
    out << "envelope: " << (e.holds ? "holds" : "violated") << " worst_ratio=" << e.worst_ratio
        << " at n=" << e.worst_n << '\n';
    return e.holds ? kOk : kViolation;
}

inline bool verify_word(const FoldingSequence& s, int size, const std::vector<std::string>& methods, unsigned threads,
                        std::ostream& out) {
    const PatternPatch ref = generate_with(methods.front(), s, size, threads);
    bool ok = true;
    for (std::size_t i = 1; i < methods.size(); ++i) {
        const PatternPatch other = generate_with(methods[i], s, size, threads);
        const auto bad = interior_mismatches(ref, other);
        const bool same = bad.empty() && ref.interior.size() == other.interior.size();
        out << s.to_string() << ' ' << methods.front() << " vs " << methods[i] << ": "
            << (same ? "agree" : "DISAGREE") << " (" << ref.interior.size() << " segments, " << bad.size()
            << " mismatches)\n";
        ok = ok && same;
    }
    return ok;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<std::string> methods;
    std::stringstream ss(o.methods);
    for (std::string m; std::getline(ss, m, ',');)
        if (!m.empty()) methods.push_back(m);
    if (methods.size() < 2) throw UsageError("--methods needs at least two generators");
    for (const auto& m : methods)
        if (m != "closed" && m != "unfold" && m != "subst") throw UsageError("unknown method '" + m + "'");

    bool ok = true;
    if (!o.seq.empty()) {
        const FoldingSequence s = FoldingSequence::parse(o.seq);
        const int size = o.size >= 0 ? o.size : (s.is_finite() ? s.length() : -1);
        if (size < 1) throw UsageError("infinite sequences need --size >= 1");
        ok = verify_word(s, size, methods, o.threads, out);
    }
    if (o.random_count > 0) {
        if (o.random_length < 1) throw UsageError("--length must be positive");
        std::mt19937_64 rng(o.rng_seed);
        for (int i = 0; i < o.random_count; ++i) {
            FoldWord w;
            for (int k = 0; k < o.random_length; ++k) w.push_back(rng() & 1 ? FoldDirection::down : FoldDirection::up);
            ok = verify_word(FoldingSequence::finite(w), o.random_length, methods, o.threads, out) && ok;
        }
    }
    if (o.seq.empty() && o.random_count <= 0) throw UsageError("verify needs --seq or --random");
    out << (ok ? "verify: ok\n" : "verify: FAILED\n");
    return ok ? kOk : kViolation;
}

inline int cmd_reconstruct(const Options& o, std::ostream& out) {
    if (o.in.empty()) throw UsageError("reconstruct needs --in");
    const auto tiles = tiling_from_string(read_file(o.in));
    Reconstruction r;
    try {
        r = reconstruct(strip_decoration(tiles), o.margin);
    } catch (const Inconsistent& e) {
        out << "reconstruct: inconsistent: " << e.what() << '\n';
        return kViolation;
    } catch (const Undecidable& e) {
        out << "reconstruct: undecidable: " << e.what() << '\n';
        return kViolation;
    }
    out << "reconstruct: " << r.colors.size() << " segments determined, layer-1 residues " << r.layer_one_residue[0]
        << ' ' << r.layer_one_residue[1] << ' ' << r.layer_one_residue[2] << '\n';
    if (!o.out.empty()) {
        PatternPatch p;
        p.interior = r.colors;
        write_output(o.out, pattern_to_string(p), out);
    }
    if (o.reference.empty()) return kOk;
    const PatternPatch ref = pattern_from_string(read_file(o.reference));
    std::size_t bad = 0, missing = 0;
    for (const auto& [s, c] : r.colors) {
        const auto rc = ref.color(s);
        if (!rc) ++missing;
        else if (*rc != c) ++bad;
    }
    out << "reference: " << bad << " mismatches, " << missing << " segments absent from reference\n";
    return bad == 0 && missing == 0 ? kOk : kViolation;
}

inline int cmd_stars(const Options& o, std::ostream& out) {
    const PatternPatch p = input_pattern(o);
    bool ok = true;
    for (const auto& [cls, n] : vertex_star_histogram(p)) {
        const bool allowed = is_allowed_star(cls);
        out << cls << ' ' << n << (allowed ? "" : " not-allowed") << '\n';
        ok = ok && allowed;
    }
    return ok ? kOk : kViolation;
}

// Without --layer a surviving translation is a violation (the pattern should
// be non-periodic); with --layer the periods are only reported.
inline int cmd_period(const Options& o, std::ostream& out) {
    const PatternPatch p = input_pattern(o);
    const std::optional<int> layer = o.layer > 0 ? std::optional<int>(o.layer) : std::nullopt;
    const auto periods = period_check(p, o.max_norm, layer);
    out << "periods:";
    for (const auto& t : periods) out << " (" << t.p << ',' << t.q << ')';
    out << '\n' << "count: " << periods.size() << '\n';
    return layer || periods.empty() ? kOk : kViolation;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Triangular paperfolding patterns", "trifold"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--threads", o.threads, "worker threads for pattern generation")->check(CLI::Range(1u, 256u));
    app.add_option("--rng-seed", o.rng_seed, "seed for randomized word tests");

    auto* gen = app.add_subcommand("generate", "write a pattern file");
    gen->add_option("--seq", o.seq, "folding sequence, e.g. +-+ or (+-)*")->required();
    gen->add_option("--size", o.size, "level k of the side-2^k triangle")->check(CLI::Range(0, 16));
    gen->add_option("--radius", o.radius, "ball window radius instead of a triangle")->check(CLI::Range(0LL, 4096LL));
    gen->add_option("--method", o.method, "closed, unfold or subst");
    gen->add_option("--out", o.out, "output file (default stdout)");
    gen->add_option("--tiling", o.tiling_out, "also write the folding tiling");
    gen->add_flag("--undecorated", o.undecorated, "drop decorations from the tiling");

    auto* render = app.add_subcommand("render", "render a pattern or tiling file as SVG");
    render->add_option("--in", o.in)->required();
    render->add_option("--svg", o.svg, "output file (default stdout)");

    auto* matrix = app.add_subcommand("matrix", "print the substitution matrix of a word");
    matrix->add_option("--word", o.word)->required();
    matrix->add_option("--power", o.power);

    auto* spectrum = app.add_subcommand("spectrum", "verify the eigen-structure of a word matrix");
    spectrum->add_option("--word", o.word)->required();

    auto* density = app.add_subcommand("density", "exact density vectors");
    density->add_option("--word", o.word)->required();
    density->add_option("--steps", o.steps);
    density->add_option("--seed", o.seed, "seed tile class 1..8");
    density->add_option("--mode", o.mode, "prefix (per letter) or repeat (per word)");
    density->add_flag("--check-envelope", o.check_envelope, "exit 1 unless the halving envelope holds");

    auto* verify = app.add_subcommand("verify", "cross-check the pattern generators");
    verify->add_option("--seq", o.seq);
    verify->add_option("--size", o.size)->check(CLI::Range(1, 16));
    verify->add_option("--methods", o.methods);
    verify->add_option("--random", o.random_count, "number of random finite words");
    verify->add_option("--length", o.random_length, "length of the random words")->check(CLI::Range(1, 12));

    auto* rec = app.add_subcommand("reconstruct", "recover a pattern from a tiling");
    rec->add_option("--in", o.in)->required();
    rec->add_option("--reference", o.reference, "pattern file to compare against");
    rec->add_option("--margin", o.margin, "erosion margin in vertex steps");
    rec->add_option("--out", o.out, "write the reconstructed pattern");

    auto* stars = app.add_subcommand("stars", "vertex star histogram");
    auto* period = app.add_subcommand("period", "translation periods of a window");
    for (auto* sub : {stars, period}) {
        sub->add_option("--in", o.in);
        sub->add_option("--seq", o.seq);
        sub->add_option("--size", o.size)->check(CLI::Range(0, 16));
        sub->add_option("--radius", o.radius)->check(CLI::Range(0LL, 4096LL));
    }
    period->add_option("--max-norm", o.max_norm)->check(CLI::Range(1LL, 1024LL));
    period->add_option("--layer", o.layer, "restrict to one layer");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "trifold: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(o, out);
        if (render->parsed()) return cmd_render(o, out);
        if (matrix->parsed()) return cmd_matrix(o, out);
        if (spectrum->parsed()) return cmd_spectrum(o, out);
        if (density->parsed()) return cmd_density(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (rec->parsed()) return cmd_reconstruct(o, out);
        if (stars->parsed()) return cmd_stars(o, out);
        if (period->parsed()) return cmd_period(o, out);
    } catch (const Inconsistent& e) {
        err << "trifold: " << e.what() << '\n';
        return kViolation;
    } catch (const NotTriangular& e) {
        err << "trifold: " << e.what() << '\n';
        return kViolation;
    } catch (const std::exception& e) {
        err << "trifold: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args), out, err);
}

} // namespace trifold::cli
