#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "flagpush/localize.hpp"
#include "flagpush/rng.hpp"

namespace flagpush {

struct CheckResult {
    std::string name;
    bool pass = true;
    long cases = 0;
    std::string witness; // inputs and both outputs, set on failure
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    int max_degree = 5;
    int trials = 25;
    std::uint64_t seed = 42;
};

namespace verify_detail {

// Per-check PRNG streams derived from the base seed, so checks are
// individually reproducible and insensitive to reordering.
inline Rng check_rng(const VerifyOptions& opt, std::uint64_t salt) { return Rng(opt.seed ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline std::string disagreement(const Polynomial& input, const std::string& lhs_name, const std::string& lhs,
                                const std::string& rhs_name, const std::string& rhs) {
    return "input " + input.to_string() + ": " + lhs_name + " = " + lhs + ", " + rhs_name + " = " + rhs;
}

} // namespace verify_detail

// The three Gysin routes agree exactly on random polynomials.
inline CheckResult check_route_equivalence(const WeylGroup& W, const std::set<int>& S, const VerifyOptions& opt) {
    CheckResult r{.name = "route_equivalence"};
    Rng rng = verify_detail::check_rng(opt, 1);
    const int l = W.root_system.rank();
    for (int t = 0; t < opt.trials; ++t) {
        const Polynomial p = random_poly(rng, VarClass::z, l, opt.max_degree, 4);
        try {
            const Polynomial closed = gysin_closed_form(p, W, S).result;
            const Polynomial localized =
                gysin_via_localization_lift(embed_as_y(relabel(p, VarClass::y)), W, S).result;
            if (!(closed == localized)) {
                r.pass = false;
                r.witness = verify_detail::disagreement(p, "closed_form", closed.to_string(), "localization",
                                                        localized.to_string());
                return r;
            }
            if (!S.empty()) {
                const Polynomial demazure = gysin_demazure_oracle(p, W, S).result;
                if (!(closed == demazure)) {
                    r.pass = false;
                    r.witness = verify_detail::disagreement(p, "closed_form", closed.to_string(), "demazure",
                                                            demazure.to_string());
                    return r;
                }
            }
        } catch (const Error& e) {
            r.pass = false;
            r.witness = "input " + p.to_string() + ": exception " + e.what();
            return r;
        }
        ++r.cases;
    }
    return r;
}

// ABBV localization of the tangent Euler class gives chi(G/T) = |W_G|.
inline CheckResult check_euler_characteristic_GT(const WeylGroup& W) {
    CheckResult r{.name = "euler_characteristic_GT"};
    r.cases = 1;
    const RationalFunction integral = abbv_integrate(euler_GT(W));
    const Polynomial expected =
        Polynomial::constant(VarClass::u, W.root_system.rank(), Rational(static_cast<long>(W.order())));
    if (!(integral == RationalFunction(expected))) {
        r.pass = false;
        r.witness = "integral = " + integral.to_string() + ", expected " + std::to_string(W.order());
    }
    return r;
}

// Localization over G/H of the top root-product class gives |W_G|/|W_H|.
// Small classes go through integrate_GH verbatim; beyond degree 9 the
// w-images of the factored top class are expanded through the root-image
// cache instead of monomial-by-monomial substitution.
inline CheckResult check_euler_characteristic_GH(const WeylGroup& W, const std::set<int>& S) {
    CheckResult r{.name = "euler_characteristic_GH"};
    r.cases = 1;
    const RootSubset sub = parabolic_subsystem(W.root_system, S);
    const std::vector<Weight> complement = complement_roots(W.root_system, sub);
    const std::size_t cosets = coset_reps(W, S).size();

    Rational integral;
    if (complement.size() <= 9) {
        const Polynomial top = root_product(complement, VarClass::z, W.root_system.rank());
        integral = integrate_GH(top, W, S);
    } else {
        const CosetList cl = coset_reps(W, S);
        const EquivClassGH e_n = euler_GH(cl);
        const Polynomial pi = root_product(W.root_system, VarClass::u);
        ImageProductCache image_product(W);
        Polynomial total(VarClass::u, W.root_system.rank());
        for (std::size_t c = 0; c < cl.size(); ++c)
            total += image_product(cl.min_reps[c], complement) * exact_div(pi, *e_n.values[c].as_polynomial());
        integral = exact_div(total, pi).constant_term();
    }
    if (integral != Rational(static_cast<long>(cosets))) {
        r.pass = false;
        r.witness = "integral = " + to_string(integral) + ", expected " + std::to_string(cosets);
    }
    return r;
}

// Projection formula. At desk scale (|Delta^+| <= 12) the integral version
// runs on random homogeneous pairs of complementary degree:
// int_{G/H} f_*(p) q = int_{G/T} p f^*(q). Beyond that, top-degree classes
// are too large to expand at every fixed point, so the class-level identity
// f_*(f^*(q) p) = q f_*(p) is checked at the configured degree instead.
inline CheckResult check_projection_formula(const WeylGroup& W, const std::set<int>& S, const VerifyOptions& opt) {
    CheckResult r{.name = "projection_formula"};
    Rng rng = verify_detail::check_rng(opt, 2);
    const int l = W.root_system.rank();
    const std::vector<int> subgroup = parabolic_subgroup(W, S);
    const long top = static_cast<long>(W.root_system.positive_roots.size());
    const bool integral_version = top <= 12;
    for (int t = 0; t < opt.trials; ++t) {
        if (integral_version) {
            const long dp = rng.uniform(0, top);
            const Polynomial p = random_poly(rng, VarClass::z, l, static_cast<int>(dp), 3, true);
            // W_H-invariant q: the W_H-orbit sum of one random homogeneous seed.
            const Polynomial seed = random_poly(rng, VarClass::z, l, static_cast<int>(top - dp), 1, true);
            Polynomial q(VarClass::z, l);
            for (int v : subgroup) q += weyl_act_poly(W.elements[static_cast<std::size_t>(v)], seed);
            const Polynomial fp = gysin_closed_form(p, W, S).result;
            const Rational lhs = integrate_GH(fp * q, W, S);
            const Rational rhs = integrate_GT(p * pullback_GH_to_GT(q, W, S), W);
            if (lhs != rhs) {
                r.pass = false;
                r.witness = "p = " + p.to_string() + ", q = " + q.to_string() + ": lhs " + to_string(lhs) +
                            ", rhs " + to_string(rhs);
                return r;
            }
        } else {
            const Polynomial p = random_poly(rng, VarClass::z, l, opt.max_degree, 3);
            const Polynomial seed = random_poly(rng, VarClass::z, l, std::min(opt.max_degree, 2), 1);
            Polynomial q(VarClass::z, l);
            for (int v : subgroup) q += weyl_act_poly(W.elements[static_cast<std::size_t>(v)], seed);
            const Polynomial lhs = gysin_closed_form(pullback_GH_to_GT(q, W, S) * p, W, S).result;
            const Polynomial rhs = q * gysin_closed_form(p, W, S).result;
            if (!(lhs == rhs)) {
                r.pass = false;
                r.witness = "p = " + p.to_string() + ", q = " + q.to_string() +
                            ": f_*(f^*(q) p) != q f_*(p)";
                return r;
            }
        }
        ++r.cases;
    }
    return r;
}

// f_* of the fiber Euler class is the constant |W_H|. Past degree 9 the
// antisymmetrization acts on the factored product through the root images
// rather than expanding the action monomial by monomial.
inline CheckResult check_fiber_euler_class(const WeylGroup& W, const std::set<int>& S) {
    CheckResult r{.name = "fiber_euler_class"};
    r.cases = 1;
    const RootSubset sub = parabolic_subsystem(W.root_system, S);
    const Polynomial cls = root_product(sub, VarClass::z);
    const std::size_t order = parabolic_subgroup(W, S).size();

    Polynomial image(VarClass::z, W.root_system.rank());
    if (sub.roots.size() <= 9) {
        image = gysin_closed_form(cls, W, S).result;
    } else {
        ImageProductCache image_product(W, VarClass::z);
        Polynomial numer(VarClass::z, W.root_system.rank());
        for (int v : parabolic_subgroup(W, S)) {
            const Polynomial img = image_product(v, sub.roots);
            if (W.elements[static_cast<std::size_t>(v)].sign() < 0)
                numer -= img;
            else
                numer += img;
        }
        image = exact_div(numer, cls);
    }

    const Polynomial expected =
        Polynomial::constant(VarClass::z, W.root_system.rank(), Rational(static_cast<long>(order)));
    if (!(image == expected)) {
        r.pass = false;
        r.witness = "f_*(fiber Euler class) = " + image.to_string() + ", expected " + std::to_string(order);
    }
    return r;
}

// The Gysin map kills everything below the fiber dimension.
inline CheckResult check_degree_vanishing(const WeylGroup& W, const std::set<int>& S, const VerifyOptions& opt) {
    CheckResult r{.name = "degree_vanishing"};
    const RootSubset sub = parabolic_subsystem(W.root_system, S);
    const int fiber_dim = static_cast<int>(sub.roots.size());
    if (fiber_dim == 0) return r; // f is the identity; nothing to vanish
    Rng rng = verify_detail::check_rng(opt, 3);
    const int l = W.root_system.rank();
    for (int t = 0; t < opt.trials; ++t) {
        const Polynomial p = random_poly(rng, VarClass::z, l, fiber_dim - 1, 4);
        const Polynomial closed = gysin_closed_form(p, W, S).result;
        const Polynomial demazure = gysin_demazure_oracle(p, W, S).result;
        if (!closed.is_zero() || !demazure.is_zero()) {
            r.pass = false;
            r.witness = "input " + p.to_string() + ": closed " + closed.to_string() + ", demazure " +
                        demazure.to_string();
            return r;
        }
        ++r.cases;
    }
    return r;
}

// Divided-difference composites along different reduced words of the longest
// parabolic element agree with the closed form. Exhaustive when the word set
// is small, sampled otherwise.
inline CheckResult check_reduced_word_independence(const WeylGroup& W, const std::set<int>& S,
                                                   const VerifyOptions& opt, int sample_count = 10) {
    CheckResult r{.name = "reduced_word_independence"};
    if (S.empty()) return r;
    Rng rng = verify_detail::check_rng(opt, 4);
    const WeylElement& w0 = longest_element(W, S);
    const int w0_index = W.element_index(w0.matrix);

    std::vector<std::vector<int>> words;
    if (w0.length <= 9) {
        words = all_reduced_words(W, w0_index);
    } else {
        for (int k = 0; k < sample_count; ++k) words.push_back(sample_reduced_word(W, w0_index, rng));
    }

    const int l = W.root_system.rank();
    const int polys = std::min(opt.trials, 5);
    for (int t = 0; t < polys; ++t) {
        const Polynomial p = random_poly(rng, VarClass::z, l, opt.max_degree, 4);
        const Polynomial closed = gysin_closed_form(p, W, S).result;
        for (const auto& word : words) {
            const Polynomial via_word = demazure_compose(W.root_system, p, word);
            if (!(via_word == closed)) {
                r.pass = false;
                std::string ws;
                for (int i : word) ws += std::to_string(i);
                r.witness = verify_detail::disagreement(p, "word " + ws, via_word.to_string(), "closed_form",
                                                        closed.to_string());
                return r;
            }
            ++r.cases;
        }
    }
    return r;
}

// Restrictions of random polynomial classes satisfy GKM divisibility.
inline CheckResult check_gkm_divisibility(const WeylGroup& W, const VerifyOptions& opt, int classes = 10) {
    CheckResult r{.name = "gkm_divisibility"};
    Rng rng = verify_detail::check_rng(opt, 5);
    const int l = W.root_system.rank();
    for (int t = 0; t < classes; ++t) {
        const Polynomial p = random_poly(rng, VarClass::uy, l, opt.max_degree, 4);
        const EquivClassGT a = restrict_GT(p, W);
        if (auto witness = gkm_divisibility_witness(a)) {
            r.pass = false;
            r.witness = "input " + p.to_string() + ": " + *witness;
            return r;
        }
        ++r.cases;
    }
    return r;
}

// sign(w) = det(w) and stored lengths match the negated-root count.
inline CheckResult check_sign_det_agreement(const WeylGroup& W) {
    CheckResult r{.name = "sign_det_agreement"};
    for (std::size_t k = 0; k < W.elements.size(); ++k) {
        const WeylElement& w = W.elements[k];
        try {
            const auto [len, sgn] = length_and_sign(W.root_system, w); // checks det internally
            if (len != w.length || sgn != w.sign()) {
                r.pass = false;
                r.witness = "element " + std::to_string(k) + ": stored length " + std::to_string(w.length) +
                            ", recomputed " + std::to_string(len);
                return r;
            }
        } catch (const Error& e) {
            r.pass = false;
            r.witness = "element " + std::to_string(k) + ": " + e.what();
            return r;
        }
        ++r.cases;
    }
    return r;
}

// Antisymmetrization is always divisible by the parabolic root product.
inline CheckResult check_antisymmetrization_divisibility(const WeylGroup& W, const std::set<int>& S,
                                                         const VerifyOptions& opt, int trials = 100) {
    CheckResult r{.name = "antisymmetrization_divisibility"};
    Rng rng = verify_detail::check_rng(opt, 6);
    const std::vector<int> subgroup = parabolic_subgroup(W, S);
    const RootSubset sub = parabolic_subsystem(W.root_system, S);
    const Polynomial denom = root_product(sub, VarClass::z);
    const int l = W.root_system.rank();
    for (int t = 0; t < trials; ++t) {
        const Polynomial p = random_poly(rng, VarClass::z, l, opt.max_degree, 4);
        try {
            exact_div(antisymmetrize(p, W, subgroup), denom);
        } catch (const NotDivisible& e) {
            r.pass = false;
            r.witness = "input " + p.to_string() + ": " + e.what();
            return r;
        }
        ++r.cases;
    }
    return r;
}

inline VerifyReport run_verify(const WeylGroup& W, const std::set<int>& S, const VerifyOptions& opt) {
    VerifyReport report;
    report.checks.push_back(check_route_equivalence(W, S, opt));
    report.checks.push_back(check_euler_characteristic_GT(W));
    report.checks.push_back(check_euler_characteristic_GH(W, S));
    report.checks.push_back(check_projection_formula(W, S, opt));
    report.checks.push_back(check_fiber_euler_class(W, S));
    report.checks.push_back(check_degree_vanishing(W, S, opt));
    report.checks.push_back(check_reduced_word_independence(W, S, opt));
    report.checks.push_back(check_gkm_divisibility(W, opt));
    report.checks.push_back(check_sign_det_agreement(W));
    report.checks.push_back(check_antisymmetrization_divisibility(W, S, opt));
    return report;
}

} // namespace flagpush
