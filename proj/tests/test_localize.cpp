#include <doctest.h>

#include "flagpush/localize.hpp"
#include "flagpush/poly_parse.hpp"
#include "flagpush/rng.hpp"
#include "flagpush/verify.hpp"

using namespace flagpush;

namespace {
WeylGroup make(const std::string& name) { return enumerate_weyl(build_root_system(parse_cartan_type(name))); }
Polynomial pz(const std::string& text, int rank) { return parse_poly(text, rank, VarClass::z); }
Polynomial pu(const std::string& text, int rank) { return parse_poly(text, rank, VarClass::u); }
Polynomial puy(const std::string& text, int rank) { return parse_poly(text, rank, VarClass::uy); }
} // namespace

TEST_CASE("restrict_GT examples") {
    const WeylGroup a1 = make("A1");
    const EquivClassGT a = restrict_GT(puy("y1", 1), a1);
    REQUIRE(a.values.size() == 2);
    CHECK(*a.values[0].as_polynomial() == pu("u1", 1));
    CHECK(*a.values[1].as_polynomial() == pu("-u1", 1));

    const EquivClassGT b = restrict_GT(puy("u1", 1), a1);
    CHECK(*b.values[0].as_polynomial() == pu("u1", 1));
    CHECK(*b.values[1].as_polynomial() == pu("u1", 1));

    const EquivClassGT c = restrict_GT(puy("1", 1), a1);
    CHECK(*c.values[0].as_polynomial() == pu("1", 1));
    CHECK(*c.values[1].as_polynomial() == pu("1", 1));
}

TEST_CASE("euler_GT examples") {
    const WeylGroup a1 = make("A1");
    const EquivClassGT e = euler_GT(a1);
    CHECK(*e.values[0].as_polynomial() == pu("2*u1", 1));
    CHECK(*e.values[1].as_polynomial() == pu("-2*u1", 1));

    const WeylGroup a2 = make("A2");
    const EquivClassGT e2 = euler_GT(a2);
    const Polynomial pi = root_product(a2.root_system, VarClass::u);
    const int w0 = a2.element_index(longest_element(a2, {1, 2}).matrix);
    CHECK(*e2.values[static_cast<std::size_t>(w0)].as_polynomial() == -pi);
}

TEST_CASE("euler_GT equals the restriction of the tangent Euler class") {
    for (const std::string name : {"A1", "A2", "B2"}) {
        const WeylGroup W = make(name);
        const EquivClassGT via_euler = euler_GT(W);
        const EquivClassGT via_restrict =
            restrict_GT(embed_as_y(root_product(W.root_system, VarClass::y)), W);
        REQUIRE(via_euler.values.size() == via_restrict.values.size());
        for (std::size_t k = 0; k < via_euler.values.size(); ++k)
            CHECK(via_euler.values[k] == via_restrict.values[k]);
    }
}

TEST_CASE("euler_GH examples") {
    const WeylGroup a2 = make("A2");
    const EquivClassGH e = euler_GH(coset_reps(a2, {1}));
    REQUIRE(e.values.size() == 3);
    CHECK(*e.values[0].as_polynomial() == pu("(-u1+2*u2)*(u1+u2)", 2));

    const EquivClassGH full = euler_GH(coset_reps(a2, {1, 2}));
    REQUIRE(full.values.size() == 1);
    CHECK(*full.values[0].as_polynomial() == pu("1", 2));

    const EquivClassGH empty = euler_GH(coset_reps(a2, {}));
    const EquivClassGT gt = euler_GT(a2);
    REQUIRE(empty.values.size() == gt.values.size());
    for (std::size_t k = 0; k < gt.values.size(); ++k) CHECK(empty.values[k] == gt.values[k]);
}

TEST_CASE("abbv_integrate examples") {
    const WeylGroup a1 = make("A1");
    CHECK(abbv_integrate(restrict_GT(puy("2*y1", 1), a1)) == RationalFunction(pu("2", 1)));
    CHECK(abbv_integrate(restrict_GT(puy("1", 1), a1)).is_zero());

    const WeylGroup a2 = make("A2");
    const Polynomial top = embed_as_y(root_product(a2.root_system, VarClass::y));
    CHECK(abbv_integrate(restrict_GT(top, a2)) == RationalFunction(pu("6", 2)));
}

TEST_CASE("relative_pushforward examples") {
    const WeylGroup a2 = make("A2");
    const CosetList cl = coset_reps(a2, {1});

    // a = restriction of c1(K_{alpha_1})
    const Polynomial alpha1_y = embed_as_y(char_to_linear(a2.root_system.simple_roots[0], VarClass::y));
    const EquivClassGH b = relative_pushforward(restrict_GT(alpha1_y, a2), cl);
    for (const RationalFunction& v : b.values) CHECK(v == RationalFunction(pu("2", 2)));

    const EquivClassGH zero = relative_pushforward(restrict_GT(puy("1", 2), a2), cl);
    for (const RationalFunction& v : zero.values) CHECK(v.is_zero());

    // S = {} is the identity map
    const CosetList trivial = coset_reps(a2, {});
    const EquivClassGT a = restrict_GT(puy("y1^2 + u2*y1", 2), a2);
    const EquivClassGH same = relative_pushforward(a, trivial);
    REQUIRE(same.values.size() == a.values.size());
    for (std::size_t k = 0; k < a.values.size(); ++k) CHECK(same.values[k] == a.values[k]);
}

TEST_CASE("invert_restriction examples") {
    const WeylGroup a2 = make("A2");
    const CosetList cl = coset_reps(a2, {1});

    // constant class
    EquivClassGH c;
    c.cosets = cl;
    c.values.assign(3, RationalFunction(pu("5", 2)));
    CHECK(invert_restriction(c) == parse_poly("5", 2, VarClass::y));

    // round trip on a W_H-invariant polynomial class
    const Polynomial inv_y = parse_poly("(-y1+2*y2)*(y1+y2)", 2, VarClass::y);
    EquivClassGH r;
    r.cosets = cl;
    for (int rep : cl.min_reps)
        r.values.emplace_back(weyl_act_poly(a2.elements[static_cast<std::size_t>(rep)], relabel(inv_y, VarClass::u)));
    CHECK(invert_restriction(r) == inv_y);

    // pushforward output from the worked example is the constant 2
    const Polynomial alpha1_y = embed_as_y(char_to_linear(a2.root_system.simple_roots[0], VarClass::y));
    const EquivClassGH b = relative_pushforward(restrict_GT(alpha1_y, a2), cl);
    CHECK(invert_restriction(b) == parse_poly("2", 2, VarClass::y));

    // a class that is not a restriction
    EquivClassGH bad;
    bad.cosets = cl;
    bad.values = {RationalFunction(pu("u1", 2)), RationalFunction(pu("u1", 2)), RationalFunction(pu("u1", 2))};
    CHECK_THROWS_AS(invert_restriction(bad), NotInImage);
}

TEST_CASE("gysin worked examples") {
    const WeylGroup a1 = make("A1");
    CHECK(gysin_closed_form(pz("z1", 1), a1, {1}).result == pz("1", 1));
    CHECK(gysin_via_localization(pz("z1", 1), a1, {1}).result == pz("1", 1));
    CHECK(gysin_demazure_oracle(pz("z1", 1), a1, {1}).result == pz("1", 1));

    const WeylGroup a2 = make("A2");
    const Polynomial c1_alpha1 = pz("2*z1 - z2", 2);
    CHECK(gysin_closed_form(c1_alpha1, a2, {1}).result == pz("2", 2));
    CHECK(gysin_via_localization(c1_alpha1, a2, {1}).result == pz("2", 2));
    CHECK(gysin_demazure_oracle(c1_alpha1, a2, {1}).result == pz("2", 2));

    CHECK(route_name(gysin_closed_form(c1_alpha1, a2, {1}).route) == "closed_form");
    CHECK(route_name(gysin_via_localization(c1_alpha1, a2, {1}).route) == "localization");
    CHECK(route_name(gysin_demazure_oracle(c1_alpha1, a2, {1}).route) == "demazure_oracle");
    CHECK(gysin_via_localization(c1_alpha1, a2, {1}).intermediate.has_value());

    CHECK(gysin_closed_form(pz("1", 2), a2, {1}).result.is_zero());
    CHECK(gysin_closed_form(pz("1", 2), a2, {1, 2}).result.is_zero());
    CHECK(gysin_demazure_oracle(pz("5", 2), a2, {1}).result.is_zero());

    // S = {}: f is the identity
    const Polynomial p = pz("z1^2*z2 - 3*z1", 2);
    CHECK(gysin_closed_form(p, a2, {}).result == p);
    CHECK(gysin_via_localization(p, a2, {}).result == p);
    CHECK_THROWS_AS(gysin_demazure_oracle(p, a2, {}), EmptySubset);
}

TEST_CASE("route equivalence on random inputs") {
    Rng rng(31);
    for (const std::string name : {"A2", "B2", "G2"}) {
        const WeylGroup W = make(name);
        const int l = W.root_system.rank();
        for (int mask = 0; mask < (1 << l); ++mask) {
            std::set<int> S;
            for (int i = 0; i < l; ++i)
                if (mask & (1 << i)) S.insert(i + 1);
            for (int t = 0; t < 5; ++t) {
                const Polynomial p = random_poly(rng, VarClass::z, l, 5, 4);
                const Polynomial closed = gysin_closed_form(p, W, S).result;
                CHECK(gysin_via_localization(p, W, S).result == closed);
                if (!S.empty()) CHECK(gysin_demazure_oracle(p, W, S).result == closed);
            }
        }
    }
}

TEST_CASE("gysin results are W_H-invariant") {
    const WeylGroup b2 = make("B2");
    Rng rng(37);
    for (int t = 0; t < 10; ++t) {
        const Polynomial p = random_poly(rng, VarClass::z, 2, 5, 4);
        const Polynomial image = gysin_closed_form(p, b2, {2}).result;
        CHECK(invariance_witness(image, b2, {2}) == 0);
    }
}

TEST_CASE("integrate_GH examples") {
    const WeylGroup a2 = make("A2");
    const RootSubset sub = parabolic_subsystem(a2.root_system, {1});
    const Polynomial top = root_product(complement_roots(a2.root_system, sub), VarClass::z, 2);
    CHECK(integrate_GH(top, a2, {1}) == 3);
    CHECK(integrate_GH(pz("1", 2), a2, {1}) == 0);
    CHECK(integrate_GH(pz("4/3", 2), a2, {1, 2}) == make_rational(4, 3)); // G/H is a point

    CHECK(integrate_GT(pz("(2*z1-z2)*(-z1+2*z2)*(z1+z2)", 2), a2) == 6);
    const WeylGroup a1 = make("A1");
    CHECK(integrate_GT(pz("z1", 1), a1) == 1);
    CHECK(integrate_GT(pz("1", 1), a1) == 0);

    CHECK_THROWS_AS(integrate_GH(pz("z1", 2), a2, {1}), NotInvariant);
}

TEST_CASE("pullback examples") {
    const WeylGroup a2 = make("A2");
    CHECK(pullback_GH_to_GT(pz("5", 2), a2, {1}) == pz("5", 2));
    const Polynomial inv = pz("(-z1+2*z2)*(z1+z2)", 2);
    CHECK(pullback_GH_to_GT(inv, a2, {1}) == inv);
    try {
        pullback_GH_to_GT(pz("z1", 2), a2, {1});
        FAIL("expected NotInvariant");
    } catch (const NotInvariant& e) {
        CHECK(e.reflection_index() == 1);
    }
}

TEST_CASE("push-pull projection formula at class level") {
    const WeylGroup b2 = make("B2");
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        const Polynomial p = random_poly(rng, VarClass::z, 2, 4, 3);
        const Polynomial seed = random_poly(rng, VarClass::z, 2, 2, 2);
        Polynomial q(VarClass::z, 2);
        for (int v : parabolic_subgroup(b2, {1})) q += weyl_act_poly(b2.elements[static_cast<std::size_t>(v)], seed);
        CHECK(gysin_closed_form(q * p, b2, {1}).result == q * gysin_closed_form(p, b2, {1}).result);
    }
}

TEST_CASE("GKM divisibility for restricted classes") {
    Rng rng(43);
    for (const std::string name : {"A2", "B2", "A3"}) {
        const WeylGroup W = make(name);
        for (int t = 0; t < 5; ++t) {
            const Polynomial p = random_poly(rng, VarClass::uy, W.root_system.rank(), 4, 4);
            CHECK(!gkm_divisibility_witness(restrict_GT(p, W)).has_value());
        }
    }
}

TEST_CASE("equivariant extensions that differ by the ideal J give the same Gysin image") {
    const WeylGroup a2 = make("A2");
    Rng rng(47);
    // W_G-invariant degree-2 polynomial: the orbit sum of u1^2.
    Polynomial inv_u(VarClass::u, 2);
    for (const WeylElement& w : a2.elements)
        inv_u += weyl_act_poly(w, pu("u1^2", 2));
    REQUIRE(invariance_witness(inv_u, a2, {1, 2}) == 0);
    const Polynomial j_gen = embed_as_y(relabel(inv_u, VarClass::y)) - embed_as_u(inv_u);

    for (int t = 0; t < 10; ++t) {
        const Polynomial p = random_poly(rng, VarClass::z, 2, 4, 3);
        const Polynomial r = random_poly(rng, VarClass::uy, 2, 2, 3);
        const Polynomial lift = embed_as_y(relabel(p, VarClass::y)) + j_gen * r;
        CHECK(gysin_via_localization_lift(lift, a2, {1}).result == gysin_closed_form(p, a2, {1}).result);
    }
}

TEST_CASE("verify report on A2") {
    const WeylGroup a2 = make("A2");
    VerifyOptions opt;
    opt.trials = 10;
    const VerifyReport report = run_verify(a2, {1}, opt);
    CHECK(report.all_pass());
    CHECK(report.checks.size() == 10);
}
