#pragma once

// Exact spectral facts about the count matrices M+ and M- and their words:
// conjugation by the common eigenbasis C, eigenvector identities,
// eigenspace dimensions and density vectors.

#include "trifold/errors.hpp"
#include "trifold/exact.hpp"
#include "trifold/folding.hpp"
#include "trifold/substitution.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trifold {

using IntVector = std::vector<BigInt>;
using RationalVector = std::vector<Rational>;

inline IntMatrix to_exact(const CountMatrix& m) {
    IntMatrix out(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) out(i, j) = m[i][j];
    return out;
}

inline const IntMatrix& rule_matrix(SubRule r) {
    static const IntMatrix plus = to_exact(substitution_matrix(SubRule::plus));
    static const IntMatrix minus = to_exact(substitution_matrix(SubRule::minus));
    return r == SubRule::plus ? plus : minus;
}

/// M_{a1} M_{a2} ... M_{ak}.
inline IntMatrix word_matrix(const FoldWord& word) {
    if (word.empty()) throw Error("empty word");
    IntMatrix m = rule_matrix(rule_for(word.front()));
    for (std::size_t i = 1; i < word.size(); ++i) m = m * rule_matrix(rule_for(word[i]));
    return m;
}

// Columns are eigenvectors of M+; both rules are lower triangular in this basis.
inline const IntMatrix& eigenbasis() {
    static const IntMatrix c{
        {1, -2, 0, 0, 0, 0, -1, 0},  {1, 0, -2, 0, 1, 0, 3, 0},  {1, 9, 1, 0, -2, 0, -3, 0},
        {1, -3, 1, 0, 1, 0, 1, 0},   {1, 2, 0, 0, 0, 0, 0, -1},  {1, 0, 0, -2, 0, 1, 0, 3},
        {1, -9, 0, 1, 0, -2, 0, -3}, {1, 3, 0, 1, 0, 1, 0, 1},
    };
    return c;
}

inline const RationalMatrix& eigenbasis_inverse() {
    static const RationalMatrix inv = [] {
        const RationalMatrix c = eigenbasis().cast<Rational>();
        RationalMatrix i = inverse(c);
        if (!(c * i == RationalMatrix::identity(8))) throw Error("C * C^-1 != I");
        return i;
    }();
    return inv;
}

struct Triangularization {
    RationalMatrix lower;
    std::vector<Rational> diagonal;
};

/// C^-1 M C, which must be lower triangular.
inline Triangularization triangularize(const IntMatrix& m) {
    Triangularization t;
    t.lower = eigenbasis_inverse() * m.cast<Rational>() * eigenbasis().cast<Rational>();
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j)
            if (t.lower(i, j) != 0)
                throw NotTriangular("C^-1 M C has a nonzero entry at (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
    for (std::size_t i = 0; i < 8; ++i) t.diagonal.push_back(t.lower(i, i));
    return t;
}

/// (4^k, 2^k, (-2)^k, (-2)^k, 1, 1, 0, 0).
inline std::vector<BigInt> expected_diagonal(int k) {
    const BigInt two_k = pow(BigInt(2), static_cast<unsigned>(k));
    const BigInt minus = k % 2 ? BigInt(-two_k) : two_k;
    return {two_k * two_k, two_k, minus, minus, 1, 1, 0, 0};
}

inline const IntVector kOnes{1, 1, 1, 1, 1, 1, 1, 1};
inline const IntVector kUPlus{0, 1, -2, 1, 0, 0, 0, 0};
inline const IntVector kUMinus{1, -2, 1, 0, 0, 0, 0, 0};
inline const IntVector kUPlusTwin{0, 0, 0, 0, 0, 1, -2, 1};
inline const IntVector kUMinusTwin{0, 0, 0, 0, 1, -2, 1, 0};
inline const std::array<IntVector, 2> kKernel{IntVector{1, -3, 3, -1, 0, 0, 0, 0},
                                              IntVector{0, 0, 0, 0, 1, -3, 3, -1}};

inline std::size_t eigenspace_dimension(const IntMatrix& m, const BigInt& lambda) {
    return m.rows() - rank(m - lambda * IntMatrix::identity(m.rows()));
}

/// Smallest e <= max_exponent with m^e entrywise positive.
inline std::optional<int> primitivity_exponent(const IntMatrix& m, int max_exponent = 4) {
    IntMatrix p = m;
    for (int e = 1; e <= max_exponent; ++e) {
        if (p.all_positive()) return e;
        p = p * m;
    }
    return std::nullopt;
}

// Both block subspaces {sum of one block = 0, other block = 0} map into
// themselves under M+ and M-.
inline bool invariant_subspaces_preserved() {
    for (SubRule r : {SubRule::plus, SubRule::minus}) {
        const IntMatrix& m = rule_matrix(r);
        for (std::size_t block = 0; block < 2; ++block) {
            const std::size_t lo = 4 * block;
            for (std::size_t i = 0; i < 3; ++i) {
                IntVector x(8, 0);
                x[lo + i] = 1;
                x[lo + i + 1] = -1;
                const IntVector y = m * x;
                BigInt sum = 0;
                for (std::size_t j = 0; j < 8; ++j) {
                    if (j >= lo && j < lo + 4) sum += y[j];
                    else if (y[j] != 0) return false;
                }
                if (sum != 0) return false;
            }
        }
    }
    return true;
}

struct EigenReport {
    std::string word;
    int length = 0;
    std::vector<BigInt> diagonal;
    std::map<BigInt, int> algebraic;   // eigenvalue -> multiplicity
    std::map<BigInt, int> geometric;   // eigenvalue -> eigenspace dimension
    bool triangular = false;
    bool diagonal_as_expected = false;
    bool perron_vector = false;        // M 1 = 4^k 1
    bool unit_vectors = false;         // the a1-selected eigenvalue-1 pair
    bool kernel_vectors = false;
    std::optional<int> primitive_exponent;
    int two_k_dimension = 0;
    bool diagonalizable = false;

    bool verified() const {
        return triangular && diagonal_as_expected && perron_vector && unit_vectors && kernel_vectors;
    }
};

inline EigenReport eigen_report(const FoldWord& word) {
    EigenReport r;
    r.word = to_string(word);
    r.length = static_cast<int>(word.size());
    const IntMatrix m = word_matrix(word);

    try {
        const auto t = triangularize(m);
        r.triangular = true;
        for (const Rational& d : t.diagonal) {
            if (denominator(d) != 1) throw NotTriangular("non-integral diagonal entry");
            r.diagonal.push_back(numerator(d));
        }
    } catch (const NotTriangular&) {
        r.triangular = false;
    }
    r.diagonal_as_expected = r.triangular && r.diagonal == expected_diagonal(r.length);
    for (const BigInt& d : r.diagonal) ++r.algebraic[d];

    const BigInt four_k = pow(BigInt(4), static_cast<unsigned>(r.length));
    r.perron_vector = m * kOnes == IntVector(8, four_k);
    const bool up = word.front() == FoldDirection::up;
    r.unit_vectors = m * (up ? kUPlus : kUMinus) == (up ? kUPlus : kUMinus) &&
                     m * (up ? kUPlusTwin : kUMinusTwin) == (up ? kUPlusTwin : kUMinusTwin);
    r.kernel_vectors = m * kKernel[0] == IntVector(8, 0) && m * kKernel[1] == IntVector(8, 0);

    int total = 0;
    for (const auto& [lambda, mult] : r.algebraic) {
        const int g = static_cast<int>(eigenspace_dimension(m, lambda));
        r.geometric[lambda] = g;
        total += g;
    }
    r.two_k_dimension = static_cast<int>(eigenspace_dimension(m, pow(BigInt(2), static_cast<unsigned>(r.length))));
    r.diagonalizable = r.triangular && total == 8;
    r.primitive_exponent = primitivity_exponent(m);
    return r;
}

inline RationalVector unit_vector(int seed) {
    if (seed < 1 || seed > 8) throw Error("seed index is 1..8");
    RationalVector e(8, Rational(0));
    e[static_cast<std::size_t>(seed - 1)] = 1;
    return e;
}

inline RationalVector scaled(const IntMatrix& m, int seed, const BigInt& denom) {
    const RationalVector v = m.cast<Rational>() * unit_vector(seed);
    RationalVector out;
    for (const Rational& x : v) out.push_back(x / denom);
    return out;
}

/// M_{word^n} e_seed / 4^(|word| n).
inline RationalVector density_limit(const FoldWord& word, int n, int seed) {
    if (n < 0) throw Error("negative repetition count");
    const IntMatrix w = word_matrix(word);
    const IntMatrix m = power(w, n);
    return scaled(m, seed, pow(BigInt(4), static_cast<unsigned>(word.size() * static_cast<std::size_t>(n))));
}

/// M_{a1...an} e_seed / 4^n where a is the periodic extension of word.
inline RationalVector prefix_density(const FoldWord& word, int n, int seed) {
    if (word.empty()) throw Error("empty word");
    if (n < 0) throw Error("negative prefix length");
    IntMatrix m = IntMatrix::identity(8);
    for (int i = 0; i < n; ++i) m = m * rule_matrix(rule_for(word[static_cast<std::size_t>(i) % word.size()]));
    return scaled(m, seed, pow(BigInt(4), static_cast<unsigned>(n)));
}

/// max_i |v_i - 1/8|.
inline Rational deviation(const RationalVector& v) {
    Rational worst = 0;
    for (const Rational& x : v) {
        Rational d = x - Rational(1, 8);
        if (d < 0) d = -d;
        if (d > worst) worst = d;
    }
    return worst;
}

struct EnvelopeResult {
    bool holds = true;
    Rational worst_ratio = 0;   // max over n of deviation_n / envelope_n
    int worst_n = 0;
};

/// Checks |v_n - 1/8|_inf <= |v_2 - 1/8|_inf * 2^-(n-2) for 2 <= n <= n_max,
/// with v_n = prefix_density(word, n, seed).
inline EnvelopeResult density_envelope(const FoldWord& word, int seed, int n_max) {
    EnvelopeResult r;
    const Rational base = deviation(prefix_density(word, 2, seed));
    for (int n = 2; n <= n_max; ++n) {
        const Rational dev = deviation(prefix_density(word, n, seed));
        const Rational bound = base / Rational(pow(BigInt(2), static_cast<unsigned>(n - 2)));
        if (dev > bound) r.holds = false;
        if (bound == 0) continue;
        const Rational ratio = dev / bound;
        if (ratio > r.worst_ratio) {
            r.worst_ratio = ratio;
            r.worst_n = n;
        }
    }
    return r;
}

} // namespace trifold
