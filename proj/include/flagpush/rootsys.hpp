#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "flagpush/cartan.hpp"
#include "flagpush/errors.hpp"
#include "flagpush/rational.hpp"

namespace flagpush {

// A character of the maximal torus, written additively in the
// fundamental-weight basis chi_1, ..., chi_l. We model the simply-connected
// group of each Cartan type, so the character lattice is the full weight
// lattice and every Weight is an integer vector.
struct Weight {
    std::vector<std::int64_t> coords;

    Weight() = default;
    explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}

    int rank() const { return static_cast<int>(coords.size()); }

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }

    Weight operator-() const {
        Weight r = *this;
        for (auto& x : r.coords) x = -x;
        return r;
    }
    Weight operator+(const Weight& o) const {
        Weight r = *this;
        for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
        return r;
    }
    Weight operator-(const Weight& o) const {
        Weight r = *this;
        for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
        return r;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ")";
    }
};

// Square integer matrix acting on weight coordinates (column vectors).
struct IntMatrix {
    int n = 0;
    std::vector<std::int64_t> a; // row-major, n*n

    IntMatrix() = default;
    explicit IntMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.n == y.n && x.a == y.a; }
    friend bool operator<(const IntMatrix& x, const IntMatrix& y) { return x.a < y.a; }

    IntMatrix operator*(const IntMatrix& o) const {
        IntMatrix r(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const std::int64_t v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    Weight apply(const Weight& w) const {
        Weight r(std::vector<std::int64_t>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.coords[i] += at(i, j) * w.coords[j];
        return r;
    }

    // Column j = image of the j-th basis weight chi_{j+1}.
    Weight column(int j) const {
        Weight r(std::vector<std::int64_t>(n, 0));
        for (int i = 0; i < n; ++i) r.coords[i] = at(i, j);
        return r;
    }

    // Exact determinant by fraction-free (Bareiss) elimination.
    std::int64_t determinant() const {
        std::vector<Integer> m(a.begin(), a.end());
        auto el = [&](int i, int j) -> Integer& { return m[static_cast<std::size_t>(i) * n + j]; };
        Integer prev = 1;
        int sign = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (el(k, k) == 0) {
                int p = -1;
                for (int i = k + 1; i < n; ++i)
                    if (el(i, k) != 0) { p = i; break; }
                if (p < 0) return 0;
                for (int j = 0; j < n; ++j) std::swap(el(k, j), el(p, j));
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    el(i, j) = (el(i, j) * el(k, k) - el(i, k) * el(k, j)) / prev;
            prev = el(k, k);
        }
        Integer det = el(n - 1, n - 1) * sign;
        return static_cast<std::int64_t>(det.get_si());
    }
};

struct RootSystem {
    CartanType type;
    std::vector<std::vector<std::int64_t>> cartan; // C[i][j] = <alpha_j, alpha_i^vee>
    std::vector<Weight> simple_roots;              // alpha_j = column j of the Cartan matrix
    std::vector<Weight> positive_roots;            // ordered by (height, lex coords)
    std::vector<std::vector<std::int64_t>> positive_root_coords; // simple-root coordinates
    std::vector<IntMatrix> simple_reflections;     // matrices on the weight lattice
    std::vector<std::int64_t> length_marks;        // d_i with d_i*C[i][j] symmetric

    int rank() const { return type.rank; }

    // Index into positive_roots, or -1.
    int positive_root_index(const Weight& w) const {
        auto it = root_index_.find(w.coords);
        return it == root_index_.end() ? -1 : it->second;
    }
    bool is_positive_root(const Weight& w) const { return positive_root_index(w) >= 0; }

    void build_index() {
        root_index_.clear();
        for (std::size_t i = 0; i < positive_roots.size(); ++i)
            root_index_[positive_roots[i].coords] = static_cast<int>(i);
    }

private:
    std::map<std::vector<std::int64_t>, int> root_index_;
};

// Positive roots supported on a subset S of simple indices: Delta^+(H).
struct RootSubset {
    const RootSystem* parent = nullptr;
    std::set<int> simple_indices;   // 1-based
    std::vector<int> root_indices;  // into parent->positive_roots
    std::vector<Weight> roots;
};

struct SizeGuard {
    std::uint64_t max_weyl_order = 51840; // |W(E6)|
    bool unlimited = false;

    void check(const CartanType& t) const {
        if (unlimited) return;
        if (weyl_order(t) > max_weyl_order)
            throw SizeGuardExceeded("Weyl group of " + t.to_string() + " has order " +
                                    std::to_string(weyl_order(t)) + " > guard " +
                                    std::to_string(max_weyl_order));
    }
};

// s_i(lambda) = lambda - lambda_i * alpha_i, with i 1-based.
inline Weight reflect(const RootSystem& rs, int i, const Weight& lambda) {
    const int l = rs.rank();
    if (i < 1 || i > l) throw IndexOutOfRange("simple index " + std::to_string(i) + " out of range 1.." + std::to_string(l));
    if (lambda.rank() != l) throw RankMismatch("weight rank mismatch");
    Weight r = lambda;
    const std::int64_t li = lambda.coords[static_cast<std::size_t>(i - 1)];
    if (li != 0)
        for (int k = 0; k < l; ++k) r.coords[k] -= li * rs.cartan[k][i - 1];
    return r;
}

namespace detail {
inline std::int64_t height(const std::vector<std::int64_t>& root_coords) {
    return std::accumulate(root_coords.begin(), root_coords.end(), std::int64_t{0});
}
} // namespace detail

// Closure of the simple roots under simple reflections, keeping the roots
// that stay nonnegative integer combinations of simple roots. Deterministic
// ordering: by (height, lexicographic weight coordinates).
inline RootSystem build_root_system(const CartanType& t, const SizeGuard& guard = {}) {
    validate_cartan_type(t);
    guard.check(t);

    RootSystem rs;
    rs.type = t;
    rs.cartan = cartan_matrix(t);
    rs.length_marks = root_length_marks(t);
    const int l = t.rank;

    for (int j = 0; j < l; ++j) {
        Weight a(std::vector<std::int64_t>(l, 0));
        for (int i = 0; i < l; ++i) a.coords[i] = rs.cartan[i][j];
        rs.simple_roots.push_back(a);
    }
    for (int i = 0; i < l; ++i) {
        IntMatrix s = IntMatrix::identity(l);
        for (int k = 0; k < l; ++k) s.at(k, i) -= rs.cartan[k][i];
        rs.simple_reflections.push_back(s);
    }

    // BFS over reflections; each root is carried with its simple-root
    // coordinates so positivity is an integer test.
    std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> found; // weight coords -> root coords
    std::vector<Weight> frontier;
    for (int j = 0; j < l; ++j) {
        std::vector<std::int64_t> e(l, 0);
        e[j] = 1;
        found[rs.simple_roots[j].coords] = e;
        frontier.push_back(rs.simple_roots[j]);
    }
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& beta : frontier) {
            const auto& c = found.at(beta.coords);
            for (int i = 1; i <= l; ++i) {
                Weight g = reflect(rs, i, beta);
                std::vector<std::int64_t> gc = c;
                gc[i - 1] -= beta.coords[static_cast<std::size_t>(i - 1)];
                if (std::any_of(gc.begin(), gc.end(), [](std::int64_t x) { return x < 0; })) continue;
                if (found.emplace(g.coords, gc).second) next.push_back(g);
            }
        }
        frontier = std::move(next);
    }

    std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> all(found.begin(), found.end());
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
        const auto hx = detail::height(x.second), hy = detail::height(y.second);
        if (hx != hy) return hx < hy;
        return x.first < y.first;
    });
    for (auto& [wc, rc] : all) {
        rs.positive_roots.emplace_back(wc);
        rs.positive_root_coords.push_back(rc);
    }
    rs.build_index();

    if (static_cast<int>(rs.positive_roots.size()) != positive_root_count(t))
        throw Error("positive root closure produced " + std::to_string(rs.positive_roots.size()) +
                    " roots for " + t.to_string() + ", expected " + std::to_string(positive_root_count(t)));
    return rs;
}

// Delta^+(H) for the parabolic subset S (1-based simple indices).
inline RootSubset parabolic_subsystem(const RootSystem& rs, const std::set<int>& S) {
    const int l = rs.rank();
    for (int i : S)
        if (i < 1 || i > l) throw IndexOutOfRange("parabolic index " + std::to_string(i) + " out of range 1.." + std::to_string(l));
    RootSubset sub;
    sub.parent = &rs;
    sub.simple_indices = S;
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
        bool supported = true;
        for (int j = 0; j < l; ++j)
            if (rs.positive_root_coords[r][j] != 0 && !S.count(j + 1)) {
                supported = false;
                break;
            }
        if (supported) {
            sub.root_indices.push_back(static_cast<int>(r));
            sub.roots.push_back(rs.positive_roots[r]);
        }
    }
    return sub;
}

// Positive roots not supported on S: Delta^+ - Delta^+(H).
inline std::vector<Weight> complement_roots(const RootSystem& rs, const RootSubset& sub) {
    std::vector<bool> in_sub(rs.positive_roots.size(), false);
    for (int r : sub.root_indices) in_sub[static_cast<std::size_t>(r)] = true;
    std::vector<Weight> out;
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r)
        if (!in_sub[r]) out.push_back(rs.positive_roots[r]);
    return out;
}

// <lambda, alpha^vee> for a positive root alpha given by its index. Uses the
// invariant pairing (omega_i, alpha_j) = d_j * delta_ij; always an integer on
// the weight lattice.
inline std::int64_t coroot_pairing(const RootSystem& rs, const Weight& lambda, int root_index) {
    const auto& c = rs.positive_root_coords[static_cast<std::size_t>(root_index)];
    const int l = rs.rank();
    std::int64_t num = 0;   // 2 * (lambda, alpha)
    std::int64_t norm = 0;  // (alpha, alpha)
    for (int j = 0; j < l; ++j) {
        num += 2 * c[j] * rs.length_marks[j] * lambda.coords[j];
        for (int i = 0; i < l; ++i) norm += c[i] * c[j] * rs.length_marks[i] * rs.cartan[i][j];
    }
    if (norm == 0 || num % norm != 0) throw Error("coroot pairing is not integral");
    return num / norm;
}

// Reflection s_alpha in an arbitrary positive root, as a matrix on the
// weight lattice (used by the GKM divisibility checks).
inline IntMatrix reflection_by_root(const RootSystem& rs, int root_index) {
    const int l = rs.rank();
    const Weight& alpha = rs.positive_roots[static_cast<std::size_t>(root_index)];
    IntMatrix m(l);
    for (int j = 0; j < l; ++j) {
        Weight ej(std::vector<std::int64_t>(l, 0));
        ej.coords[j] = 1;
        const std::int64_t pair = coroot_pairing(rs, ej, root_index);
        for (int i = 0; i < l; ++i) m.at(i, j) = (i == j ? 1 : 0) - pair * alpha.coords[i];
    }
    return m;
}

} // namespace flagpush
