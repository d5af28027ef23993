#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gl2/charcycle.hpp"
#include "gl2/oracles.hpp"

using namespace gl2;

TEST_CASE("monomial construction") {
    auto m = Monomial::make(2, {1, 0, 0, 2}); // y0 * z1^2
    CHECK(m.y_exp(0) == 1);
    CHECK(m.z_exp(1) == 2);
    CHECK_FALSE(m.is_one());
    CHECK(Monomial::one(2).is_one());
    CHECK(Monomial::variable(2, false, 0).divides(m));
    CHECK_FALSE(m.divides(Monomial::variable(2, false, 0)));
    // y0 z0 is zero in the quotient ring: refused.
    CHECK_THROWS_WITH_AS(Monomial::make(1, {1, 1}), doctest::Contains("zero"),
                         validation_error);
    CHECK_THROWS_AS(Monomial::make(2, {1, 0, 0}), validation_error);
    CHECK_THROWS_AS(Monomial::make(2, {1, 0, 0, -1}), validation_error);
}

TEST_CASE("ideal minimalization") {
    auto y0 = Monomial::variable(2, false, 0);
    auto y0sq = Monomial::variable(2, false, 0, 2);
    auto z1 = Monomial::variable(2, true, 1);
    auto I = MonomialIdeal::make(2, {y0sq, y0, z1, y0});
    REQUIRE(I.generators().size() == 2);
    CHECK(std::count(I.generators().begin(), I.generators().end(), y0) == 1);
    CHECK(std::count(I.generators().begin(), I.generators().end(), z1) == 1);
    CHECK(MonomialIdeal::zero(2).is_zero());
    CHECK(MonomialIdeal::make(1, {Monomial::one(1)}).contains_one());
}

TEST_CASE("minimal primes") {
    Params P1 = make_params(3, 1);
    auto primes = minimal_primes(P1);
    REQUIRE(primes.size() == 2);
    CHECK(to_string(primes[0]) == "(y0)");
    CHECK(to_string(primes[1]) == "(z0)");
    CHECK(primes[1].is_distinguished());
    CHECK(distinguished_prime(P1) == primes[1]);

    CHECK(minimal_primes(make_params(3, 2)).size() == 4);
    CHECK(minimal_primes(make_params(3, 3)).size() == 8);

    Params P2 = make_params(3, 2);
    CHECK(parse_prime("z0,y1", P2) == MinimalPrime{2, 1});
    CHECK(parse_prime("(y0,z1)", P2) == MinimalPrime{2, 2});
    CHECK_THROWS_AS(parse_prime("z0", P2), validation_error);
    CHECK_THROWS_AS(parse_prime("z0,z0", P2), validation_error);
}

TEST_CASE("mult_at_prime closed form") {
    Params P1 = make_params(3, 1);
    auto p0 = distinguished_prime(P1);
    auto py = MinimalPrime{1, 0};
    CHECK(mult_at_prime(MonomialIdeal::zero(1), p0) == 1);
    CHECK(mult_at_prime(MonomialIdeal::zero(1), py) == 1);

    auto Iy = MonomialIdeal::make(1, {Monomial::variable(1, false, 0)});
    CHECK(mult_at_prime(Iy, p0) == 0);
    CHECK(mult_at_prime(Iy, py) == 1);

    Params P2 = make_params(3, 2);
    auto I = MonomialIdeal::make(2, {Monomial::make(2, {1, 0, 0, 1})}); // (y0 z1)
    CHECK(mult_at_prime(I, parse_prime("z0,y1", P2)) == 0);
    CHECK(mult_at_prime(I, distinguished_prime(P2)) == 1);

    CHECK_THROWS_AS(mult_at_prime(MonomialIdeal::make(1, {Monomial::one(1)}), p0),
                    validation_error);
}

TEST_CASE("closed form equals saturation oracle on random ideals") {
    std::mt19937_64 rng(31);
    for (i64 f = 1; f <= 3; ++f) {
        Params P = make_params(3, f);
        auto primes = minimal_primes(P);
        for (int t = 0; t < 500; ++t) {
            MonomialIdeal I = oracle::random_monomial_ideal(rng, P);
            for (const auto& q : primes) {
                i64 m = mult_at_prime(I, q);
                CHECK(m == oracle::mult_at_prime_saturation(I, q));
                CHECK((m == 0 || m == 1));
            }
        }
    }
}

TEST_CASE("char_cycle on cyclic modules") {
    Params P = make_params(3, 1);
    ModuleSpec free_module;
    free_module.summands.push_back({MonomialIdeal::zero(1), 1, ""});
    auto z = char_cycle(free_module, P);
    CHECK(z.coeff(MinimalPrime{1, 0}) == 1);
    CHECK(z.coeff(MinimalPrime{1, 1}) == 1);

    ModuleSpec two_copies;
    two_copies.summands.push_back(
        {MonomialIdeal::make(1, {Monomial::variable(1, true, 0)}), 2, ""});
    auto z2 = char_cycle(two_copies, P);
    CHECK(z2.coeff(MinimalPrime{1, 0}) == 0); // generator z0 not in (y0)
    CHECK(z2.coeff(MinimalPrime{1, 1}) == 2); // z0 in the distinguished prime

    CHECK(char_cycle(ModuleSpec{}, P).is_zero());
}

TEST_CASE("cycle arithmetic") {
    CycleVector a(1);
    a.coeff(MinimalPrime{1, 1}) = 2;
    CycleVector zero(1);
    CHECK(cycle_add(a, zero) == a);

    CycleVector b(1);
    b.coeff(MinimalPrime{1, 1}) = 1;
    CHECK(cycle_sub(a, b).coeff(MinimalPrime{1, 1}) == 1);
    CHECK_THROWS_WITH_AS(cycle_sub(b, a), doctest::Contains("(z0)"), arithmetic_error);
    CHECK_THROWS_AS(cycle_add(a, CycleVector(2)), validation_error);
}

TEST_CASE("cycle additivity over sums and filtrations") {
    std::mt19937_64 rng(37);
    for (i64 f = 1; f <= 3; ++f) {
        Params P = make_params(3, f);
        std::uniform_int_distribution<i64> mult(1, 3);
        auto random_spec = [&]() {
            ModuleSpec N;
            i64 n = 1 + static_cast<i64>(rng() % 3);
            for (i64 i = 0; i < n; ++i)
                N.summands.push_back({oracle::random_monomial_ideal(rng, P), mult(rng), ""});
            return N;
        };
        for (int t = 0; t < 100; ++t) {
            ModuleSpec N1 = random_spec();
            ModuleSpec N2 = random_spec();
            ModuleSpec direct_sum;
            direct_sum.summands = N1.summands;
            direct_sum.summands.insert(direct_sum.summands.end(), N2.summands.begin(),
                                       N2.summands.end());
            ModuleSpec layered;
            layered.filtration = {N1, N2};
            auto expected = cycle_add(char_cycle(N1, P), char_cycle(N2, P));
            CHECK(char_cycle(direct_sum, P) == expected);
            CHECK(char_cycle(layered, P) == expected);
        }
    }
}

TEST_CASE("cycle coefficients bounded by total multiplicity") {
    std::mt19937_64 rng(41);
    Params P = make_params(3, 2);
    for (int t = 0; t < 200; ++t) {
        ModuleSpec N;
        i64 total = 0;
        i64 n = 1 + static_cast<i64>(rng() % 3);
        for (i64 i = 0; i < n; ++i) {
            i64 k = 1 + static_cast<i64>(rng() % 3);
            total += k;
            N.summands.push_back({oracle::random_monomial_ideal(rng, P), k, ""});
        }
        CycleVector z = char_cycle(N, P);
        for (i64 v : z.coeffs()) {
            CHECK(v >= 0);
            CHECK(v <= total);
        }
    }
}

TEST_CASE("profile multiplicity at the distinguished prime") {
    Params P2 = make_params(3, 2);
    CHECK(profile_p0_multiplicity(SubrepProfile::full(ProfileKind::reducible, 2, 3, 3), P2) ==
          12);
    CHECK(profile_p0_multiplicity(SubrepProfile::zero(ProfileKind::reducible, 2, 3, 3), P2) ==
          0);

    Params P1 = make_params(3, 1);
    CHECK(profile_p0_multiplicity(
              SubrepProfile::from_dims(ProfileKind::reducible, 1, 3, 2, {1, 0}), P1) == 1);

    CHECK_THROWS_AS(
        profile_p0_multiplicity(SubrepProfile::full(ProfileKind::irreducible, 1, 3, 2), P1),
        validation_error);

    std::mt19937_64 rng(43);
    for (i64 f = 1; f <= 3; ++f) {
        Params P = make_params(3, f);
        for (int t = 0; t < 100; ++t) {
            auto prof = random_profile(rng, ProfileKind::reducible, f, 3, 4);
            CHECK(profile_p0_multiplicity(prof, P) == soc_length(prof, P));
        }
    }
}

TEST_CASE("monomial and ideal parsing") {
    Params P = make_params(3, 2);
    CHECK(parse_monomial("y0*z1^2", P) == Monomial::make(2, {1, 0, 0, 2}));
    CHECK(parse_monomial("1", P) == Monomial::one(2));
    CHECK(to_string(parse_monomial("y0*z1^2", P)) == "y0*z1^2");
    CHECK(parse_ideal("0", P).is_zero());
    CHECK(parse_ideal("y0,z1", P).generators().size() == 2);
    CHECK_THROWS_AS(parse_monomial("y0*z0", P), validation_error);
    CHECK_THROWS_AS(parse_monomial("w0", P), validation_error);
    CHECK_THROWS_AS(parse_monomial("y5", P), validation_error);
}
