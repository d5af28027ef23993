#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "gl2/diagram.hpp"
#include "gl2/oracles.hpp"

using namespace gl2;

TEST_CASE("serre_weights for f=1") {
    Params P = make_params(29, 1);
    WeightSet W = serre_weights(InertialData{{3}, InertialKind::reducible_split, 0}, P);
    REQUIRE(W.size() == 2);
    CHECK(W.weights[0] == SerreWeight{{3}, 0});
    CHECK(W.lengths[0] == 0);
    CHECK(W.weights[1] == SerreWeight{{23}, 4});
    CHECK(W.lengths[1] == 1);
    CHECK(char_injectivity_check(W, P));
}

TEST_CASE("serre_weights for f=2, frozen from the symbolic twist formulas") {
    Params P = make_params(29, 2);
    WeightSet W = serre_weights(InertialData{{3, 4}, InertialKind::reducible_split, 0}, P);
    REQUIRE(W.size() == 4);
    // display order: (x,x), (x+1, P-2-x), (P-2-x, x+1), (P-3-x, P-3-x)
    CHECK(W.weights[0] == SerreWeight{{3, 4}, 0});
    CHECK(W.weights[1] == SerreWeight{{4, 23}, 144});  // e = p r1 + p - 1
    CHECK(W.weights[2] == SerreWeight{{24, 5}, 815});  // e = -(p - 3 - 2 r0 + p)/2 mod q-1
    CHECK(W.weights[3] == SerreWeight{{23, 22}, 149}); // e = (q - 1 + sum)/2
    CHECK(W.lengths == std::vector<i64>{0, 1, 1, 2});
    CHECK(W.by_length(0).size() == 1);
    CHECK(W.by_length(1).size() == 2);
    CHECK(W.by_length(2).size() == 1);
    CHECK(char_injectivity_check(W, P));
}

TEST_CASE("serre_weights level sizes over a grid") {
    std::mt19937_64 rng(23);
    for (i64 p : {7, 13, 29}) {
        for (i64 f = 1; f <= 4; ++f) {
            Params P = make_params(p, f);
            for (int t = 0; t < 30; ++t) {
                std::vector<i64> r(static_cast<size_t>(f));
                for (auto& x : r)
                    x = static_cast<i64>(rng() % static_cast<u64>(P.p - 2));
                InertialData rho{r, InertialKind::reducible_split, 0};
                if (!is_inertial_generic(rho, 0, P))
                    continue;
                WeightSet W = serre_weights(rho, P);
                CHECK(static_cast<i64>(W.size()) == checked_pow(2, f));
                for (i64 l = 0; l <= f; ++l)
                    CHECK(static_cast<i64>(W.by_length(l).size()) == binomial(f, l));
            }
        }
    }
}

TEST_CASE("serre_weights preconditions") {
    Params P = make_params(29, 1);
    CHECK_THROWS_AS(
        serre_weights(InertialData{{0}, InertialKind::reducible_split, 0}, P),
        validation_error);
    CHECK_THROWS_AS(serre_weights(InertialData{{3}, InertialKind::irreducible, 0}, P),
                    validation_error);
}

TEST_CASE("jh_principal_series for f=1") {
    Params P = make_params(29, 1);
    SerreWeight s0{{3}, 0};
    auto jh = jh_principal_series(s0, P);
    REQUIRE(jh.size() == 2);
    CHECK(jh[0] == s0);
    CHECK(jh[1] == SerreWeight{{25}, 3});
    CHECK(jh[1] == weight_s(s0, P));

    // The inducing weight's own det twist rides along.
    SerreWeight s2{{3}, 2};
    auto jh2 = jh_principal_series(s2, P);
    CHECK(jh2[0] == s2);
    CHECK(jh2[1] == SerreWeight{{25}, 5});
}

TEST_CASE("jh_principal_series counts over a grid") {
    std::mt19937_64 rng(29);
    for (i64 p : {13, 29}) {
        for (i64 f = 1; f <= 4; ++f) {
            Params P = make_params(p, f);
            for (int t = 0; t < 40; ++t) {
                SerreWeight s0 = oracle::random_generic_weight(rng, P, 1);
                auto jh = jh_principal_series(s0, P);
                std::set<SerreWeight> distinct(jh.begin(), jh.end());
                CHECK(static_cast<i64>(distinct.size()) == checked_pow(2, f));
                CHECK(distinct.count(s0) == 1);
            }
        }
    }
    CHECK_THROWS_AS(jh_principal_series(SerreWeight{{0}, 0}, make_params(29, 1)),
                    validation_error);
}

TEST_CASE("jh_meets_weightset singles out the inducing weight") {
    {
        Params P = make_params(29, 1);
        WeightSet W = serre_weights(InertialData{{3}, InertialKind::reducible_split, 0}, P);
        auto meet = jh_meets_weightset(SerreWeight{{3}, 0}, W, P);
        REQUIRE(meet.size() == 1);
        CHECK(meet.front() == SerreWeight{{3}, 0});
    }
    {
        Params P = make_params(31, 2);
        WeightSet W = serre_weights(InertialData{{5, 7}, InertialKind::reducible_split, 0}, P);
        auto meet = jh_meets_weightset(SerreWeight{{5, 7}, 0}, W, P);
        CHECK(meet.size() == 1);
    }
    {
        Params P = make_params(29, 3);
        WeightSet W =
            serre_weights(InertialData{{5, 7, 9}, InertialKind::reducible_split, 0}, P);
        auto meet = jh_meets_weightset(SerreWeight{{5, 7, 9}, 0}, W, P);
        CHECK(meet.size() == 1);
    }
}

TEST_CASE("jh_meets_weightset preconditions") {
    Params P = make_params(29, 1);
    WeightSet W = serre_weights(InertialData{{3}, InertialKind::reducible_split, 0}, P);
    // Not a member.
    CHECK_THROWS_AS(jh_meets_weightset(SerreWeight{{4}, 0}, W, P), validation_error);
    // Member of positive length.
    CHECK_THROWS_AS(jh_meets_weightset(SerreWeight{{23}, 4}, W, P), validation_error);
}

TEST_CASE("hypothesis_profile counts") {
    {
        HypothesisProfile h = hypothesis_profile(1, make_params(3, 1), ProfileKind::reducible);
        CHECK(h.ext_dims == std::vector<i64>{1, 2, 1});
        CHECK(h.ext_total == 4);
        CHECK(h.socle_length == 2);
    }
    {
        HypothesisProfile h = hypothesis_profile(3, make_params(3, 2), ProfileKind::reducible);
        CHECK(h.ext_dims[2] == 18); // C(4,2)*3
        CHECK(h.ext_total == 48);   // 4^2*3
    }
    {
        HypothesisProfile h =
            hypothesis_profile(2, make_params(3, 3), ProfileKind::irreducible);
        CHECK(h.socle_length == 16); // 2*2^3
        CHECK(h.torsion_char_multiplicity == 2);
    }
    for (i64 r = 1; r <= 5; ++r) {
        for (i64 f = 1; f <= 5; ++f) {
            HypothesisProfile h =
                hypothesis_profile(r, make_params(3, f), ProfileKind::reducible);
            for (i64 i = 0; i <= 2 * f; ++i) {
                CHECK(h.ext_dims[static_cast<size_t>(i)] == binomial(2 * f, i) * r);
                CHECK(h.ext_dims[static_cast<size_t>(i)] ==
                      h.ext_dims[static_cast<size_t>(2 * f - i)]);
            }
            CHECK(h.ext_total == checked_pow(4, f) * r);
        }
    }
    CHECK_THROWS_AS(hypothesis_profile(0, make_params(3, 1), ProfileKind::reducible),
                    validation_error);
}
