#include <doctest.h>

#include "flagpush/rng.hpp"
#include "flagpush/weyl.hpp"
#include "flagpush/weyl_action.hpp"

using namespace flagpush;

namespace {
WeylGroup make(const std::string& name) { return enumerate_weyl(build_root_system(parse_cartan_type(name))); }
} // namespace

TEST_CASE("Weyl group orders") {
    CHECK(make("A1").order() == 2);
    CHECK(make("A2").order() == 6);
    CHECK(make("A3").order() == 24);
    CHECK(make("B2").order() == 8);
    CHECK(make("B3").order() == 48);
    CHECK(make("D4").order() == 192);
    CHECK(make("G2").order() == 12);
    CHECK(make("F4").order() == 1152);
}

TEST_CASE("identity first, deterministic order") {
    const WeylGroup W = make("B2");
    CHECK(W.elements[0].matrix == IntMatrix::identity(2));
    CHECK(W.elements[0].length == 0);
    for (std::size_t k = 1; k < W.elements.size(); ++k)
        CHECK(W.elements[k - 1].length <= W.elements[k].length);
}

TEST_CASE("act_on_weight examples") {
    const WeylGroup a1 = make("A1");
    const Weight omega({std::vector<std::int64_t>{1}});
    CHECK(act_on_weight(a1.elements[0], omega) == omega);
    const WeylElement& s = a1.elements[1];
    CHECK(act_on_weight(s, omega) == Weight({std::vector<std::int64_t>{-1}}));

    // s1 s2 acting on alpha_1 in A2: first s2, then s1.
    const WeylGroup a2 = make("A2");
    const int s1 = a2.simple_element_index[0], s2 = a2.simple_element_index[1];
    const IntMatrix m = a2.elements[static_cast<std::size_t>(s1)].matrix *
                        a2.elements[static_cast<std::size_t>(s2)].matrix;
    const WeylElement& w = a2.elements[static_cast<std::size_t>(a2.element_index(m))];
    CHECK(act_on_weight(w, Weight({std::vector<std::int64_t>{2, -1}})) ==
          Weight({std::vector<std::int64_t>{-1, 2}}));

    CHECK_THROWS_AS(act_on_weight(s, Weight({std::vector<std::int64_t>{1, 0}})), RankMismatch);
}

TEST_CASE("length and sign") {
    const WeylGroup a1 = make("A1");
    CHECK(length_and_sign(a1.root_system, a1.elements[0]) == std::pair<int, int>{0, 1});
    CHECK(length_and_sign(a1.root_system, a1.elements[1]) == std::pair<int, int>{1, -1});

    const WeylGroup a2 = make("A2");
    const WeylElement& w0 = longest_element(a2, {1, 2});
    CHECK(length_and_sign(a2.root_system, w0) == std::pair<int, int>{3, -1});
}

TEST_CASE("stored lengths match the negated-root count and the word length") {
    for (const std::string name : {"A2", "B2", "G2", "A3", "B3"}) {
        const WeylGroup W = make(name);
        for (const WeylElement& w : W.elements) {
            const auto [len, sgn] = length_and_sign(W.root_system, w); // also checks det
            CHECK(len == w.length);
            CHECK(sgn == w.sign());
            CHECK(static_cast<int>(w.reduced_word.size()) == w.length);
            // the word multiplies out to the matrix
            IntMatrix prod = IntMatrix::identity(W.root_system.rank());
            for (int i : w.reduced_word) prod = prod * W.root_system.simple_reflections[static_cast<std::size_t>(i - 1)];
            CHECK(prod == w.matrix);
        }
    }
}

TEST_CASE("sign is multiplicative on sampled pairs") {
    const WeylGroup W = make("B3");
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        const int i = static_cast<int>(rng.uniform(0, static_cast<std::int64_t>(W.order()) - 1));
        const int j = static_cast<int>(rng.uniform(0, static_cast<std::int64_t>(W.order()) - 1));
        const int k = W.compose(i, j);
        CHECK(W.elements[static_cast<std::size_t>(k)].sign() ==
              W.elements[static_cast<std::size_t>(i)].sign() * W.elements[static_cast<std::size_t>(j)].sign());
    }
}

TEST_CASE("parabolic subgroup examples") {
    const WeylGroup a2 = make("A2");
    CHECK(parabolic_subgroup(a2, {}) == std::vector<int>{0});
    CHECK(parabolic_subgroup(a2, {1}).size() == 2);
    CHECK(parabolic_subgroup(a2, {1, 2}).size() == 6);
    CHECK_THROWS_AS(parabolic_subgroup(a2, {5}), IndexOutOfRange);
}

TEST_CASE("coset representatives") {
    const WeylGroup a2 = make("A2");
    CHECK(coset_reps(a2, {1}).size() == 3);
    CHECK(coset_reps(a2, {1, 2}).size() == 1);
    const WeylGroup b2 = make("B2");
    CHECK(coset_reps(b2, {2}).size() == 4);

    // identity coset first; cosets partition the group
    const CosetList cl = coset_reps(b2, {1});
    CHECK(cl.min_reps[0] == 0);
    CHECK(cl.size() * cl.subgroup_indices.size() == b2.order());
    std::set<int> seen;
    for (const auto& members : cl.coset_members)
        for (int m : members) CHECK(seen.insert(m).second);
    CHECK(seen.size() == b2.order());
}

TEST_CASE("minimal representatives are length-additive and keep Delta+(H) positive") {
    for (const std::string name : {"A2", "A3", "B3", "C3"}) {
        const WeylGroup W = make(name);
        const int l = W.root_system.rank();
        for (int mask = 0; mask < (1 << l); ++mask) {
            std::set<int> S;
            for (int i = 0; i < l; ++i)
                if (mask & (1 << i)) S.insert(i + 1);
            const CosetList cl = coset_reps(W, S);
            const RootSubset sub = parabolic_subsystem(W.root_system, S);
            for (std::size_t c = 0; c < cl.size(); ++c) {
                const WeylElement& rep = W.elements[static_cast<std::size_t>(cl.min_reps[c])];
                for (const Weight& beta : sub.roots) CHECK(W.root_system.is_positive_root(rep.matrix.apply(beta)));
                for (std::size_t k = 0; k < cl.subgroup_indices.size(); ++k) {
                    const WeylElement& v = W.elements[static_cast<std::size_t>(cl.subgroup_indices[k])];
                    const WeylElement& rv = W.elements[static_cast<std::size_t>(cl.coset_members[c][k])];
                    CHECK(rv.length == rep.length + v.length);
                }
            }
        }
    }
}

TEST_CASE("longest element") {
    const WeylGroup a1 = make("A1");
    CHECK(longest_element(a1, {1}).length == 1);
    const WeylGroup a2 = make("A2");
    CHECK(longest_element(a2, {1, 2}).length == 3);
    CHECK(longest_element(a2, {1}).length == 1);
    CHECK(longest_element(a2, {1}).matrix == a2.root_system.simple_reflections[0]);
    CHECK_THROWS_AS(longest_element(a2, {}), EmptySubset);
}

TEST_CASE("w acts on the full root product by its sign") {
    for (const std::string name : {"A1", "A2", "B2", "G2"}) {
        const WeylGroup W = make(name);
        const Polynomial pi = root_product(W.root_system, VarClass::u);
        for (const WeylElement& w : W.elements) {
            Polynomial expected = pi;
            if (w.sign() < 0) expected *= Rational(-1);
            CHECK(weyl_act_poly(w, pi) == expected);
        }
    }
    // sampled for rank 3
    const WeylGroup b3 = make("B3");
    const Polynomial pi = root_product(b3.root_system, VarClass::u);
    Rng rng(11);
    for (int t = 0; t < 8; ++t) {
        const WeylElement& w =
            b3.elements[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(b3.order()) - 1))];
        Polynomial expected = pi;
        if (w.sign() < 0) expected *= Rational(-1);
        CHECK(weyl_act_poly(w, pi) == expected);
    }
}

TEST_CASE("all reduced words") {
    const WeylGroup a2 = make("A2");
    const int w0 = a2.element_index(longest_element(a2, {1, 2}).matrix);
    const auto words = all_reduced_words(a2, w0);
    REQUIRE(words.size() == 2); // [1,2,1] and [2,1,2]
    for (const auto& word : words) {
        CHECK(word.size() == 3);
        IntMatrix prod = IntMatrix::identity(2);
        for (int i : word) prod = prod * a2.root_system.simple_reflections[static_cast<std::size_t>(i - 1)];
        CHECK(a2.element_index(prod) == w0);
    }

    // sampled words are reduced words of the right element
    const WeylGroup a3 = make("A3");
    const int w0_3 = a3.element_index(longest_element(a3, {1, 2, 3}).matrix);
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        const auto word = sample_reduced_word(a3, w0_3, rng);
        CHECK(word.size() == 6);
        IntMatrix prod = IntMatrix::identity(3);
        for (int i : word) prod = prod * a3.root_system.simple_reflections[static_cast<std::size_t>(i - 1)];
        CHECK(a3.element_index(prod) == w0_3);
    }
}
