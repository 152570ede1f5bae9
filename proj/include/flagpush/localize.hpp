#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flagpush/ratfun.hpp"
#include "flagpush/rootsys.hpp"
#include "flagpush/weyl.hpp"
#include "flagpush/weyl_action.hpp"

namespace flagpush {

// Equivariant cohomology classes are stored by their restriction to the
// torus fixed points: a class on G/T is a function from W_G to rational
// functions in the u-variables, a class on G/H a function on the cosets
// W_G/W_H. Ordinary integrals fall out by evaluating localization sums at
// u = 0 once they have collapsed to polynomials.

struct EquivClassGT {
    const WeylGroup* group = nullptr;
    std::vector<RationalFunction> values; // indexed like group->elements
};

struct EquivClassGH {
    CosetList cosets;
    std::vector<RationalFunction> values; // indexed like cosets.min_reps
};

enum class GysinRoute { closed_form, localization, demazure_oracle };

inline std::string route_name(GysinRoute r) {
    switch (r) {
        case GysinRoute::closed_form: return "closed_form";
        case GysinRoute::localization: return "localization";
        case GysinRoute::demazure_oracle: return "demazure_oracle";
    }
    return {};
}

struct GysinResult {
    Polynomial result; // z-variables, W_H-invariant
    GysinRoute route;
    std::optional<EquivClassGH> intermediate;
};

// ---- fixed-point restriction ----

// i_M^*: at the fixed point w, u_i stays u_i and y_i becomes the linear form
// of w(chi_i).
inline EquivClassGT restrict_GT(const Polynomial& p_uy, const WeylGroup& W) {
    const int l = W.root_system.rank();
    if (p_uy.var_class() != VarClass::uy || p_uy.rank() != l)
        throw RankMismatch("restrict_GT expects a uy-polynomial of matching rank");

    EquivClassGT a;
    a.group = &W;
    a.values.reserve(W.elements.size());
    std::vector<Polynomial> images(static_cast<std::size_t>(2 * l), Polynomial());
    for (int i = 0; i < l; ++i) images[static_cast<std::size_t>(i)] = Polynomial::variable(VarClass::u, l, i);
    for (const WeylElement& w : W.elements) {
        for (int i = 0; i < l; ++i)
            images[static_cast<std::size_t>(l + i)] = char_to_linear(w.matrix.column(i), VarClass::u);
        a.values.emplace_back(substitute(p_uy, images));
    }
    return a;
}

// ---- equivariant Euler classes ----

// Images of a root list under w, normalized to positive roots, sorted, with
// the negation parity tracked. w permutes the roots up to sign, so the
// product of the image linear forms is +-(product over the normalized list).
inline std::vector<Weight> normalized_root_images(const WeylGroup& W, int element_index,
                                                  const std::vector<Weight>& roots, int& negations) {
    const RootSystem& rs = W.root_system;
    const IntMatrix& m = W.elements[static_cast<std::size_t>(element_index)].matrix;
    negations = 0;
    std::vector<Weight> normalized;
    normalized.reserve(roots.size());
    for (const Weight& alpha : roots) {
        Weight img = m.apply(alpha);
        if (!rs.is_positive_root(img)) {
            img = -img;
            if (!rs.is_positive_root(img)) throw Error("Weyl image of a root is not a root");
            ++negations;
        }
        normalized.push_back(std::move(img));
    }
    std::sort(normalized.begin(), normalized.end());
    return normalized;
}

// Product of the image linear forms, memoized on the normalized multiset so
// repeated image sets (in particular the full Delta^+, which every Weyl
// element fixes as a multiset) are expanded only once.
class ImageProductCache {
public:
    explicit ImageProductCache(const WeylGroup& W, VarClass cls = VarClass::u) : W_(&W), cls_(cls) {}

    Polynomial operator()(int element_index, const std::vector<Weight>& roots) {
        int neg = 0;
        std::vector<Weight> normalized = normalized_root_images(*W_, element_index, roots, neg);
        auto& cache = neg % 2 ? negated_ : plain_;
        auto it = cache.find(normalized);
        if (it == cache.end()) {
            Polynomial prod = root_product(normalized, cls_, W_->root_system.rank());
            if (neg % 2) prod *= Rational(-1);
            it = cache.emplace(std::move(normalized), std::move(prod)).first;
        }
        return it->second;
    }

private:
    const WeylGroup* W_;
    VarClass cls_;
    std::map<std::vector<Weight>, Polynomial> plain_, negated_;
};

// e_M as a function on W_G: e_M(w) = w(prod_{a in D+} c1(S_a)). The two
// closed expressions for it must agree: the w-image product, obtained from
// the normalized image multiset (which must be Delta^+ itself) with the
// negation parity, and (-1)^w times the fixed product.
inline EquivClassGT euler_GT(const WeylGroup& W) {
    const RootSystem& rs = W.root_system;
    const Polynomial pi = root_product(rs, VarClass::u);
    const Polynomial neg_pi = -pi;
    std::vector<Weight> sorted_roots = rs.positive_roots;
    std::sort(sorted_roots.begin(), sorted_roots.end());

    EquivClassGT e;
    e.group = &W;
    e.values.reserve(W.elements.size());
    for (std::size_t k = 0; k < W.elements.size(); ++k) {
        int neg = 0;
        if (normalized_root_images(W, static_cast<int>(k), rs.positive_roots, neg) != sorted_roots)
            throw Error("element " + std::to_string(k) + " does not permute the positive roots up to sign");
        const int image_sign = neg % 2 ? -1 : 1;
        if (image_sign != W.elements[k].sign())
            throw Error("Euler class expressions disagree at element " + std::to_string(k));
        e.values.emplace_back(image_sign < 0 ? neg_pi : pi);
    }
    return e;
}

// e_N as a function on W_G/W_H, evaluated at the minimal representative and
// re-checked at a second representative of the same coset.
inline EquivClassGH euler_GH(const CosetList& cosets) {
    const WeylGroup& W = *cosets.group;
    const RootSubset sub = parabolic_subsystem(W.root_system, cosets.simple_indices);
    const std::vector<Weight> complement = complement_roots(W.root_system, sub);

    ImageProductCache image_product(W);
    EquivClassGH e;
    e.cosets = cosets;
    e.values.reserve(cosets.size());
    for (std::size_t c = 0; c < cosets.size(); ++c) {
        Polynomial val = image_product(cosets.min_reps[c], complement);
        if (cosets.coset_members[c].size() > 1) {
            const Polynomial again = image_product(cosets.coset_members[c][1], complement);
            if (!(again == val))
                throw RepresentativeMismatch("e_N value depends on the coset representative at coset " +
                                             std::to_string(c));
        }
        e.values.emplace_back(std::move(val));
    }
    return e;
}

// ---- localization sums ----

// ABBV integration over G/T: sum_w a(w)/e_M(w). Every e_M value is
// (-1)^w times the full root product, so polynomial-valued classes sum over
// that single denominator; genuinely fractional values take the generic
// rational-function path. For any class satisfying the fixed-point
// compatibility conditions the sum is a polynomial; a non-polynomial value
// signals a malformed input class.
inline RationalFunction abbv_integrate(const EquivClassGT& a) {
    const WeylGroup& W = *a.group;
    const EquivClassGT e = euler_GT(W);
    const Polynomial pi = root_product(W.root_system, VarClass::u);

    Polynomial shared_num = Polynomial::zero(VarClass::u, W.root_system.rank());
    RationalFunction tail(shared_num);
    for (std::size_t k = 0; k < a.values.size(); ++k) {
        if (const auto p = a.values[k].as_polynomial()) {
            if (W.elements[k].sign() < 0)
                shared_num -= *p;
            else
                shared_num += *p;
        } else {
            tail += a.values[k] / e.values[k];
        }
    }
    const RationalFunction sum = RationalFunction(std::move(shared_num), pi) + tail;
    const auto poly = sum.as_polynomial();
    if (!poly) throw NotPolynomialResult("localization sum over G/T did not simplify to a polynomial");
    return RationalFunction(*poly);
}

// Relative localization along f: G/T -> G/H. The value at wW_H is
// e_N(wW_H) * sum_{v in W_H} a(wv)/e_M(wv), summing over the fiber of the
// fixed-point map. Fiber sums use the shared e_M denominator when values are
// polynomials, as in abbv_integrate.
inline EquivClassGH relative_pushforward(const EquivClassGT& a, const CosetList& cosets) {
    const WeylGroup& W = *cosets.group;
    if (a.group != &W) throw Error("class and coset list belong to different Weyl groups");
    const EquivClassGT e_m = euler_GT(W);
    const EquivClassGH e_n = euler_GH(cosets);
    const Polynomial pi = root_product(W.root_system, VarClass::u);

    EquivClassGH b;
    b.cosets = cosets;
    b.values.reserve(cosets.size());
    for (std::size_t c = 0; c < cosets.size(); ++c) {
        if (cosets.coset_members[c].size() == 1) {
            // Singleton fiber (H = T): collapse e_N/e_M before touching a.
            const std::size_t m = static_cast<std::size_t>(cosets.coset_members[c][0]);
            b.values.push_back(e_n.values[c] / e_m.values[m] * a.values[m]);
            continue;
        }
        Polynomial shared_num = Polynomial::zero(VarClass::u, W.root_system.rank());
        RationalFunction tail(shared_num);
        for (int member : cosets.coset_members[c]) {
            const std::size_t m = static_cast<std::size_t>(member);
            if (const auto p = a.values[m].as_polynomial()) {
                if (W.elements[m].sign() < 0)
                    shared_num -= *p;
                else
                    shared_num += *p;
            } else {
                tail += a.values[m] / e_m.values[m];
            }
        }
        const RationalFunction fiber_sum = RationalFunction(std::move(shared_num), pi) + tail;
        b.values.push_back(e_n.values[c] * fiber_sum);
    }
    return b;
}

// (i_N^*)^{-1} on the image of polynomial classes: read the value at the
// identity coset and verify w.q against every other coset, so the inverse is
// total exactly on its image.
inline Polynomial invert_restriction(const EquivClassGH& b) {
    const WeylGroup& W = *b.cosets.group;
    const auto q = b.values.at(0).as_polynomial();
    if (!q) throw NotInImage("identity-coset value is not a polynomial");
    for (std::size_t c = 0; c < b.cosets.size(); ++c) {
        const WeylElement& rep = W.elements[static_cast<std::size_t>(b.cosets.min_reps[c])];
        if (!(RationalFunction(weyl_act_poly(rep, *q)) == b.values[c]))
            throw NotInImage("coset value " + std::to_string(c) + " is not the restriction of the identity value");
    }
    return relabel(*q, VarClass::y);
}

// ---- invariance helpers ----

// Returns the 1-based index of a simple reflection in S violating
// W_H-invariance, or 0 when invariant.
inline int invariance_witness(const Polynomial& q, const WeylGroup& W, const std::set<int>& S) {
    for (int i : S) {
        const IntMatrix& s = W.root_system.simple_reflections[static_cast<std::size_t>(i - 1)];
        if (!(apply_weight_matrix(s, q) == q)) return i;
    }
    return 0;
}

// ---- the Gysin homomorphism, three ways ----

// Closed form: f_* p = [sum_{w in W_H} (-1)^w w.p] / prod_{a in D+(H)} c1(L_a),
// cross-checked against the symmetrized-sum form sum_v v.(p / prod c1(L_a)).
inline GysinResult gysin_closed_form(const Polynomial& p_z, const WeylGroup& W, const std::set<int>& S) {
    if (p_z.var_class() != VarClass::z || p_z.rank() != W.root_system.rank())
        throw RankMismatch("gysin expects a z-polynomial of matching rank");
    const std::vector<int> subgroup = parabolic_subgroup(W, S);
    const RootSubset sub = parabolic_subsystem(W.root_system, S);
    const Polynomial denom = root_product(sub, VarClass::z);

    const Polynomial numer = antisymmetrize(p_z, W, subgroup);
    Polynomial result = exact_div(numer, denom);

    // Cross-check against the symmetrized form sum_v v.(p / prod c1(L_a)),
    // with each v-image denominator expanded as the product of the image
    // linear forms.
    ImageProductCache image_product(W, VarClass::z);
    RationalFunction symmetrized(Polynomial::zero(VarClass::z, p_z.rank()));
    for (int v : subgroup) {
        const WeylElement& el = W.elements[static_cast<std::size_t>(v)];
        symmetrized += RationalFunction(weyl_act_poly(el, p_z), image_product(v, sub.roots));
    }
    if (!(symmetrized == RationalFunction(result)))
        throw Error("closed form and symmetrized form of the Gysin map disagree");
    if (const int i = invariance_witness(result, W, S))
        throw Error("Gysin image is not invariant under reflection " + std::to_string(i));

    return GysinResult{std::move(result), GysinRoute::closed_form, std::nullopt};
}

// Localization route for an explicit equivariant extension in the uy
// variables: restrict to the fixed points, push forward fiberwise, invert the
// G/H restriction, then apply h_N^* (u -> 0, y -> z).
inline GysinResult gysin_via_localization_lift(const Polynomial& lift_uy, const WeylGroup& W,
                                               const std::set<int>& S) {
    const CosetList cosets = coset_reps(W, S);
    const EquivClassGT a = restrict_GT(lift_uy, W);
    EquivClassGH b = relative_pushforward(a, cosets);
    const Polynomial q_y = invert_restriction(b);
    Polynomial result = restrict_to_fiber(q_y);
    return GysinResult{std::move(result), GysinRoute::localization, std::move(b)};
}

// Localization route with the tautological lift y <- z. Must return exactly
// the closed form; the agreement is asserted here.
inline GysinResult gysin_via_localization(const Polynomial& p_z, const WeylGroup& W, const std::set<int>& S) {
    if (p_z.var_class() != VarClass::z || p_z.rank() != W.root_system.rank())
        throw RankMismatch("gysin expects a z-polynomial of matching rank");
    GysinResult r = gysin_via_localization_lift(embed_as_y(relabel(p_z, VarClass::y)), W, S);
    if (!(r.result == gysin_closed_form(p_z, W, S).result))
        throw Error("localization route disagrees with the closed form");
    return r;
}

// Independent oracle: the divided-difference composite along a reduced word
// of the longest element of W_H.
inline GysinResult gysin_demazure_oracle(const Polynomial& p_z, const WeylGroup& W, const std::set<int>& S) {
    if (S.empty()) throw EmptySubset("the divided-difference oracle needs a nonempty parabolic subset");
    const WeylElement& w0 = longest_element(W, S);
    Polynomial result = demazure_compose(W.root_system, p_z, w0.reduced_word);
    return GysinResult{std::move(result), GysinRoute::demazure_oracle, std::nullopt};
}

// ---- integration ----

// Integral over G/H of a W_H-invariant class: the localization sum
// sum_{wW_H} w.q / e_N(wW_H) collapses to a polynomial whose value at u = 0
// is the ordinary integral. The common denominator is the full root product,
// which every e_N value divides.
inline Rational integrate_GH(const Polynomial& q_z, const WeylGroup& W, const std::set<int>& S) {
    const RootSystem& rs = W.root_system;
    if (q_z.var_class() != VarClass::z || q_z.rank() != rs.rank())
        throw RankMismatch("integrate expects a z-polynomial of matching rank");
    if (const int i = invariance_witness(q_z, W, S))
        throw NotInvariant("integrand is not invariant under reflection s_" + std::to_string(i), i);

    const CosetList cosets = coset_reps(W, S);
    const EquivClassGH e_n = euler_GH(cosets);
    const Polynomial pi = root_product(rs, VarClass::u);
    const Polynomial q_u = relabel(q_z, VarClass::u);

    Polynomial total(VarClass::u, rs.rank());
    for (std::size_t c = 0; c < cosets.size(); ++c) {
        const WeylElement& rep = W.elements[static_cast<std::size_t>(cosets.min_reps[c])];
        const Polynomial cofactor = exact_div(pi, *e_n.values[c].as_polynomial());
        total += weyl_act_poly(rep, q_u) * cofactor;
    }
    Polynomial value(VarClass::u, rs.rank());
    try {
        value = exact_div(total, pi);
    } catch (const NotDivisible&) {
        throw NotPolynomialResult("localization sum over G/H did not simplify to a polynomial");
    }
    return value.constant_term();
}

// Integral over G/T (H = T).
inline Rational integrate_GT(const Polynomial& q_z, const WeylGroup& W) { return integrate_GH(q_z, W, {}); }

// f^*: H^*(G/H) -> H^*(G/T) is the inclusion of W_H-invariant representatives.
inline Polynomial pullback_GH_to_GT(const Polynomial& q_z, const WeylGroup& W, const std::set<int>& S) {
    if (const int i = invariance_witness(q_z, W, S))
        throw NotInvariant("pullback input is not invariant under reflection s_" + std::to_string(i), i);
    return q_z;
}

// ---- structural checks ----

// GKM divisibility: for fixed points joined by a root, the difference of
// values is divisible by that root's linear form. Checked for every pair
// (w, s_a w) with polynomial values; returns a human-readable witness on
// failure.
inline std::optional<std::string> gkm_divisibility_witness(const EquivClassGT& a) {
    const WeylGroup& W = *a.group;
    const RootSystem& rs = W.root_system;
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
        const IntMatrix refl = reflection_by_root(rs, static_cast<int>(r));
        const Polynomial alpha = char_to_linear(rs.positive_roots[r], VarClass::u);
        for (std::size_t k = 0; k < W.elements.size(); ++k) {
            const int other = W.element_index(refl * W.elements[k].matrix);
            if (static_cast<std::size_t>(other) < k) continue; // each edge once
            const auto va = a.values[k].as_polynomial();
            const auto vb = a.values[static_cast<std::size_t>(other)].as_polynomial();
            if (!va || !vb) continue;
            try {
                exact_div(*va - *vb, alpha);
            } catch (const NotDivisible&) {
                return "GKM divisibility fails at element " + std::to_string(k) + ", root " +
                       rs.positive_roots[r].to_string();
            }
        }
    }
    return std::nullopt;
}

} // namespace flagpush
