#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "flagpush/rootsys.hpp"

namespace flagpush {

// One Weyl group element. reduced_word lists 1-based simple indices; the
// element is the product s_{i1} * ... * s_{ik} acting on column vectors, so
// the rightmost letter acts first.
struct WeylElement {
    IntMatrix matrix;
    int length = 0;
    std::vector<int> reduced_word;

    int sign() const { return length % 2 ? -1 : 1; }
};

// Full Weyl group, enumerated breadth-first from the identity. Elements are
// ordered by length, ties broken lexicographically by matrix entries; the
// identity is element 0. Immutable after enumeration.
struct WeylGroup {
    RootSystem root_system;
    std::vector<WeylElement> elements;
    std::vector<int> simple_element_index; // index of s_i at position i-1

    std::uint64_t order() const { return elements.size(); }

    int element_index(const IntMatrix& m) const {
        auto it = index_.find(m.a);
        if (it == index_.end()) throw Error("matrix is not a Weyl group element");
        return it->second;
    }

    // Index of elements[i] * elements[j].
    int compose(int i, int j) const {
        return element_index(elements[static_cast<std::size_t>(i)].matrix *
                             elements[static_cast<std::size_t>(j)].matrix);
    }

    // Index of w * s_i (i 1-based).
    int right_multiply_simple(int w, int i) const {
        return compose(w, simple_element_index[static_cast<std::size_t>(i - 1)]);
    }

    // True iff l(w * s_i) < l(w), i.e. w(alpha_i) is a negative root.
    bool has_right_descent(int w, int i) const {
        const Weight img = elements[static_cast<std::size_t>(w)].matrix.apply(
            root_system.simple_roots[static_cast<std::size_t>(i - 1)]);
        return !root_system.is_positive_root(img);
    }

    void build_index() {
        index_.clear();
        for (std::size_t k = 0; k < elements.size(); ++k) index_[elements[k].matrix.a] = static_cast<int>(k);
    }

private:
    std::map<std::vector<std::int64_t>, int> index_;
};

// Left cosets w W_H with minimal-length representatives, identity coset
// first. Holds a view onto the group; the WeylGroup must outlive it.
struct CosetList {
    const WeylGroup* group = nullptr;
    std::set<int> simple_indices;                 // S generating W_H
    std::vector<int> subgroup_indices;            // W_H as indices into group->elements
    std::vector<int> min_reps;                    // minimal representative per coset
    std::vector<std::vector<int>> coset_members;  // members[c][k] = min_reps[c] * subgroup[k]

    std::size_t size() const { return min_reps.size(); }
};

inline WeylGroup enumerate_weyl(const RootSystem& rs, const SizeGuard& guard = {}) {
    guard.check(rs.type);
    const int l = rs.rank();

    WeylGroup W;
    W.root_system = rs;

    WeylElement id;
    id.matrix = IntMatrix::identity(l);
    W.elements.push_back(id);

    std::set<std::vector<std::int64_t>> seen;
    seen.insert(id.matrix.a);

    std::vector<WeylElement> level{id};
    int depth = 0;
    while (!level.empty()) {
        ++depth;
        std::vector<WeylElement> next;
        for (const WeylElement& w : level) {
            for (int i = 1; i <= l; ++i) {
                WeylElement v;
                v.matrix = w.matrix * rs.simple_reflections[static_cast<std::size_t>(i - 1)];
                if (!seen.insert(v.matrix.a).second) continue;
                v.length = depth;
                v.reduced_word = w.reduced_word;
                v.reduced_word.push_back(i);
                next.push_back(std::move(v));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const WeylElement& a, const WeylElement& b) { return a.matrix.a < b.matrix.a; });
        for (auto& w : next) W.elements.push_back(std::move(w));
        level.assign(W.elements.end() - static_cast<std::ptrdiff_t>(next.size()), W.elements.end());
        if (next.empty()) break;
    }

    W.build_index();
    W.simple_element_index.resize(static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i)
        W.simple_element_index[static_cast<std::size_t>(i - 1)] =
            W.element_index(rs.simple_reflections[static_cast<std::size_t>(i - 1)]);

    if (W.order() != weyl_order(rs.type))
        throw Error("Weyl enumeration produced " + std::to_string(W.order()) + " elements for " +
                    rs.type.to_string() + ", expected " + std::to_string(weyl_order(rs.type)));
    return W;
}

inline Weight act_on_weight(const WeylElement& w, const Weight& lambda) {
    if (w.matrix.n != lambda.rank()) throw RankMismatch("weight rank does not match Weyl element");
    return w.matrix.apply(lambda);
}

// Length as the number of positive roots sent negative, and sign = (-1)^length.
// Cross-checked against det(matrix).
inline std::pair<int, int> length_and_sign(const RootSystem& rs, const WeylElement& w) {
    int neg = 0;
    for (const Weight& beta : rs.positive_roots) {
        const Weight img = w.matrix.apply(beta);
        if (rs.is_positive_root(img)) continue;
        if (!rs.is_positive_root(-img)) throw Error("Weyl element does not permute the roots");
        ++neg;
    }
    const int sign = neg % 2 ? -1 : 1;
    if (sign != w.matrix.determinant()) throw Error("sign/determinant mismatch");
    return {neg, sign};
}

// Subgroup generated by {s_i : i in S}, as sorted indices into W.elements.
inline std::vector<int> parabolic_subgroup(const WeylGroup& W, const std::set<int>& S) {
    const int l = W.root_system.rank();
    for (int i : S)
        if (i < 1 || i > l) throw IndexOutOfRange("parabolic index " + std::to_string(i) + " out of range 1.." + std::to_string(l));
    std::set<int> members{0};
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int w : frontier)
            for (int i : S) {
                const int v = W.right_multiply_simple(w, i);
                if (members.insert(v).second) next.push_back(v);
            }
        frontier = std::move(next);
    }
    return {members.begin(), members.end()};
}

// Minimal-length left-coset representatives of W/W_H. Element order is by
// (length, matrix lex), so the first unassigned element of each coset is the
// unique minimal representative with lowest index.
inline CosetList coset_reps(const WeylGroup& W, const std::set<int>& S) {
    CosetList cl;
    cl.group = &W;
    cl.simple_indices = S;
    cl.subgroup_indices = parabolic_subgroup(W, S);

    std::vector<bool> assigned(W.elements.size(), false);
    for (std::size_t w = 0; w < W.elements.size(); ++w) {
        if (assigned[w]) continue;
        std::vector<int> members;
        members.reserve(cl.subgroup_indices.size());
        for (int v : cl.subgroup_indices) {
            const int m = W.compose(static_cast<int>(w), v);
            assigned[static_cast<std::size_t>(m)] = true;
            members.push_back(m);
        }
        cl.min_reps.push_back(static_cast<int>(w));
        cl.coset_members.push_back(std::move(members));
    }
    return cl;
}

// Longest element of the parabolic subgroup W_H; its length is |Delta^+(H)|.
inline const WeylElement& longest_element(const WeylGroup& W, const std::set<int>& S) {
    if (S.empty()) throw EmptySubset("longest element requires a nonempty simple-index subset");
    const std::vector<int> sub = parabolic_subgroup(W, S);
    int best = sub.front();
    for (int w : sub)
        if (W.elements[static_cast<std::size_t>(w)].length > W.elements[static_cast<std::size_t>(best)].length)
            best = w;
    const RootSubset delta_h = parabolic_subsystem(W.root_system, S);
    const WeylElement& w0 = W.elements[static_cast<std::size_t>(best)];
    if (w0.length != static_cast<int>(delta_h.roots.size()))
        throw Error("longest parabolic element has unexpected length");
    return w0;
}

// All reduced words of an element, built from right descents. Exponential in
// general; intended for the rank <= 3 oracle checks.
inline std::vector<std::vector<int>> all_reduced_words(const WeylGroup& W, int element_index) {
    if (element_index == 0) return {{}};
    std::vector<std::vector<int>> words;
    const int l = W.root_system.rank();
    for (int i = 1; i <= l; ++i) {
        if (!W.has_right_descent(element_index, i)) continue;
        const int shorter = W.right_multiply_simple(element_index, i);
        for (auto word : all_reduced_words(W, shorter)) {
            word.push_back(i);
            words.push_back(std::move(word));
        }
    }
    return words;
}

} // namespace flagpush
