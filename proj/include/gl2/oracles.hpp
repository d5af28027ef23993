#pragma once

#include <random>

#include "gl2/charcycle.hpp"
#include "gl2/tuples.hpp"

// Reference implementations used for cross-checking: deliberately written
// straight off the defining conditions, independent of the production code
// paths they validate. The production code never calls these; the test
// suites and the verify sweep do.

namespace gl2::oracle {

// Filter all 4^f candidate tuples by the cyclic membership conditions.
std::vector<AffineTuple> enumerate_D_bruteforce(const Params& P);
std::vector<AffineTuple> enumerate_P_bruteforce(const Params& P);

// Search every digit vector for the unique weight, distinct from w, whose
// character is the swap of w's character. Throws invariant_error if the
// match is not unique.
SerreWeight weight_s_bruteforce(const SerreWeight& w, const Params& P);

// Count n-generic weights by direct enumeration of digit windows.
i64 count_generic_weights_bruteforce(const Params& P, i64 n);

// Localization multiplicity computed by saturation: strip the exponents of
// the inverted (unselected) variables from each generator, then test
// whether the stripped ideal is the unit ideal.
i64 mult_at_prime_saturation(const MonomialIdeal& I, const MinimalPrime& q);

SerreWeight random_weight(std::mt19937_64& rng, const Params& P);
SerreWeight random_generic_weight(std::mt19937_64& rng, const Params& P, i64 n);
MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, const Params& P);

} // namespace gl2::oracle
