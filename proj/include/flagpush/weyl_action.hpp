#pragma once

#include <set>
#include <vector>

#include "flagpush/poly.hpp"
#include "flagpush/rootsys.hpp"
#include "flagpush/weyl.hpp"

namespace flagpush {

// c1 of the line bundle attached to the character gamma: the linear form
// sum_i gamma_i x_i in the chosen variable class.
inline Polynomial char_to_linear(const Weight& gamma, VarClass cls) {
    if (cls == VarClass::uy) throw Error("char_to_linear expects a single-block variable class");
    const int l = gamma.rank();
    Polynomial p(cls, l);
    for (int i = 0; i < l; ++i) {
        if (gamma.coords[static_cast<std::size_t>(i)] == 0) continue;
        Exponents e(static_cast<std::size_t>(l), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.add_term(std::move(e), Rational(gamma.coords[static_cast<std::size_t>(i)]));
    }
    return p;
}

// The ring automorphism substituting x_i by the linear form of w(chi_i).
// Column i of the matrix is the image weight of chi_{i+1}.
inline Polynomial apply_weight_matrix(const IntMatrix& m, const Polynomial& p) {
    if (p.var_class() == VarClass::uy) throw Error("Weyl action expects a single-block variable class");
    if (m.n != p.rank()) throw RankMismatch("Weyl element rank does not match polynomial");
    std::vector<Polynomial> images;
    images.reserve(static_cast<std::size_t>(m.n));
    for (int i = 0; i < m.n; ++i) images.push_back(char_to_linear(m.column(i), p.var_class()));
    return substitute(p, images);
}

inline Polynomial weyl_act_poly(const WeylElement& w, const Polynomial& p) {
    return apply_weight_matrix(w.matrix, p);
}

// Product of c1-linear forms over a list of roots; the empty product is 1.
inline Polynomial root_product(const std::vector<Weight>& roots, VarClass cls, int rank) {
    Polynomial p = Polynomial::constant(cls, rank, Rational(1));
    for (const Weight& r : roots) p *= char_to_linear(r, cls);
    return p;
}

inline Polynomial root_product(const RootSystem& rs, VarClass cls) {
    return root_product(rs.positive_roots, cls, rs.rank());
}

inline Polynomial root_product(const RootSubset& sub, VarClass cls) {
    return root_product(sub.roots, cls, sub.parent->rank());
}

// sum_{v in subgroup} (-1)^v v.p
inline Polynomial antisymmetrize(const Polynomial& p, const WeylGroup& W, const std::vector<int>& subgroup) {
    Polynomial acc(p.var_class(), p.rank());
    for (int v : subgroup) {
        const WeylElement& el = W.elements[static_cast<std::size_t>(v)];
        Polynomial img = weyl_act_poly(el, p);
        if (el.sign() < 0)
            acc -= img;
        else
            acc += img;
    }
    return acc;
}

// BGG divided difference d_i(p) = (p - s_i.p) / alpha_i. The numerator is
// always divisible: it vanishes on the reflection hyperplane of alpha_i.
inline Polynomial divided_difference(const RootSystem& rs, const Polynomial& p, int i) {
    const int l = rs.rank();
    if (i < 1 || i > l) throw IndexOutOfRange("simple index " + std::to_string(i) + " out of range 1.." + std::to_string(l));
    const Polynomial num = p - apply_weight_matrix(rs.simple_reflections[static_cast<std::size_t>(i - 1)], p);
    return exact_div(num, char_to_linear(rs.simple_roots[static_cast<std::size_t>(i - 1)], p.var_class()));
}

// d_{i_k} o ... o d_{i_1}, applied left-to-right along the word. Reduced-word
// independence holds when the word is reduced; unreduced words are permitted
// and the result then depends on the word.
inline Polynomial demazure_compose(const RootSystem& rs, Polynomial p, const std::vector<int>& word) {
    for (int i : word) p = divided_difference(rs, p, i);
    return p;
}

} // namespace flagpush
