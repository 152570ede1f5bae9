#pragma once

#include <cstdint>
#include <random>
#include <set>

#include "flagpush/poly.hpp"
#include "flagpush/weyl.hpp"

namespace flagpush {

// Deterministic random source: mt19937_64 with rejection sampling for bounded
// draws, so identical seeds give identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

private:
    std::mt19937_64 eng_;
};

// Sparse random polynomial: up to `terms` monomials of total degree at most
// max_degree (exactly max_degree when homogeneous), coefficients uniform in
// {-9..9} \ {0}.
inline Polynomial random_poly(Rng& rng, VarClass cls, int rank, int max_degree, int terms,
                              bool homogeneous = false) {
    const int nv = var_count(cls, rank);
    Polynomial p(cls, rank);
    for (int t = 0; t < terms; ++t) {
        const long d = homogeneous ? max_degree : rng.uniform(0, max_degree);
        Exponents e(static_cast<std::size_t>(nv), 0);
        for (long k = 0; k < d; ++k) ++e[static_cast<std::size_t>(rng.uniform(0, nv - 1))];
        std::int64_t c = rng.uniform(-9, 8);
        if (c >= 0) ++c; // skip zero
        p.add_term(std::move(e), Rational(static_cast<long>(c)));
    }
    return p;
}

// One uniformly sampled reduced word, by a random right-descent walk.
inline std::vector<int> sample_reduced_word(const WeylGroup& W, int element_index, Rng& rng) {
    std::vector<int> word;
    int w = element_index;
    const int l = W.root_system.rank();
    while (w != 0) {
        std::vector<int> descents;
        for (int i = 1; i <= l; ++i)
            if (W.has_right_descent(w, i)) descents.push_back(i);
        const int i = descents[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(descents.size()) - 1))];
        word.push_back(i);
        w = W.right_multiply_simple(w, i);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

} // namespace flagpush
