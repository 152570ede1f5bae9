#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "flagpush/errors.hpp"

namespace flagpush {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
    Series series;
    int rank;

    std::string to_string() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }
};

inline void validate_cartan_type(const CartanType& t) {
    const int n = t.rank;
    bool ok = false;
    switch (t.series) {
        case Series::A: ok = n >= 1; break;
        case Series::B: ok = n >= 2; break;
        case Series::C: ok = n >= 2; break;
        case Series::D: ok = n >= 3; break;
        case Series::E: ok = n == 6 || n == 7 || n == 8; break;
        case Series::F: ok = n == 4; break;
        case Series::G: ok = n == 2; break;
    }
    if (!ok)
        throw InvalidCartanType("invalid Cartan type " + t.to_string() + ": rank out of range");
}

// Accepts e.g. "A3", "b2", "G2" (case-insensitive series letter, then rank).
inline CartanType parse_cartan_type(const std::string& text) {
    if (text.size() < 2)
        throw InvalidCartanType("invalid Cartan type \"" + text + "\"");
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c != 'A' && c != 'B' && c != 'C' && c != 'D' && c != 'E' && c != 'F' && c != 'G')
        throw InvalidCartanType("invalid Cartan type \"" + text + "\": unknown series");
    int rank = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InvalidCartanType("invalid Cartan type \"" + text + "\": bad rank");
        rank = rank * 10 + (text[i] - '0');
        if (rank > 64)
            throw InvalidCartanType("invalid Cartan type \"" + text + "\": rank out of range");
    }
    CartanType t{static_cast<Series>(c), rank};
    validate_cartan_type(t);
    return t;
}

// Cartan matrix with the column convention used throughout: entry C[i][j] is
// <alpha_j, alpha_i^vee>, so column j holds the fundamental-weight coordinates
// of the simple root alpha_j. Numbering follows Bourbaki.
inline std::vector<std::vector<std::int64_t>> cartan_matrix(const CartanType& t) {
    validate_cartan_type(t);
    const int n = t.rank;
    std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto bond = [&](int i, int j) { // 0-based, symmetric single bond
        c[i][j] = -1;
        c[j][i] = -1;
    };
    switch (t.series) {
        case Series::A:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case Series::B:
            // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            c[n - 1][n - 2] = -2;
            break;
        case Series::C:
            // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            c[n - 2][n - 1] = -2;
            break;
        case Series::D:
            for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
            bond(n - 3, n - 1);
            break;
        case Series::E:
            // chain 1-3-4-5-...-n with node 2 attached to node 4
            bond(0, 2);
            for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
            bond(1, 3);
            break;
        case Series::F:
            bond(0, 1);
            bond(1, 2);
            bond(2, 3);
            c[2][1] = -2; // <alpha_2, alpha_3^vee> = -2 (alpha_2 long, alpha_3 short)
            break;
        case Series::G:
            c[0][1] = -3; // <alpha_2, alpha_1^vee> = -3 (alpha_1 short, alpha_2 long)
            c[1][0] = -1;
            break;
    }
    return c;
}

// Relative half square-lengths d_i = (alpha_i, alpha_i)/2 up to a common
// scale, chosen so that d_i * C[i][j] is symmetric.
inline std::vector<std::int64_t> root_length_marks(const CartanType& t) {
    validate_cartan_type(t);
    const int n = t.rank;
    std::vector<std::int64_t> d(n, 1);
    switch (t.series) {
        case Series::B:
            for (int i = 0; i + 1 < n; ++i) d[i] = 2;
            break;
        case Series::C:
            d[n - 1] = 2;
            break;
        case Series::F:
            d[0] = d[1] = 2;
            break;
        case Series::G:
            d[1] = 3;
            break;
        default:
            break;
    }
    return d;
}

// Saturating multiply: high ranks overflow 64 bits, and a wrapped order
// would silently defeat the size guard.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    constexpr std::uint64_t kMax = ~std::uint64_t{0};
    if (a != 0 && b > kMax / a) return kMax;
    return a * b;
}

inline std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f = saturating_mul(f, static_cast<std::uint64_t>(i));
    return f;
}

inline std::uint64_t pow2_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 0; i < n; ++i) f = saturating_mul(f, 2);
    return f;
}

// Order of the Weyl group, by the classical product formulas; saturates at
// 2^64 - 1 for ranks far beyond anything enumerable.
inline std::uint64_t weyl_order(const CartanType& t) {
    validate_cartan_type(t);
    const int n = t.rank;
    switch (t.series) {
        case Series::A: return factorial_u64(n + 1);
        case Series::B:
        case Series::C: return saturating_mul(pow2_u64(n), factorial_u64(n));
        case Series::D: return saturating_mul(pow2_u64(n - 1), factorial_u64(n));
        case Series::G: return 12;
        case Series::F: return 1152;
        case Series::E:
            if (n == 6) return 51840;
            if (n == 7) return 2903040;
            return 696729600;
    }
    throw InvalidCartanType("unreachable");
}

// Classical |Delta^+| counts, used as a construction cross-check.
inline int positive_root_count(const CartanType& t) {
    validate_cartan_type(t);
    const int n = t.rank;
    switch (t.series) {
        case Series::A: return n * (n + 1) / 2;
        case Series::B:
        case Series::C: return n * n;
        case Series::D: return n * (n - 1);
        case Series::G: return 6;
        case Series::F: return 24;
        case Series::E:
            if (n == 6) return 36;
            if (n == 7) return 63;
            return 120;
    }
    throw InvalidCartanType("unreachable");
}

} // namespace flagpush
