#pragma once

#include "gl2/tuples.hpp"

namespace gl2 {

// The weight set attached to split inertial data: 2^f weights keyed by
// tuple, graded by length with level sizes C(f, l).
struct WeightSet {
    std::vector<AffineTuple> tuples;  // display order
    std::vector<SerreWeight> weights; // parallel to tuples
    std::vector<i64> lengths;         // parallel to tuples

    size_t size() const { return weights.size(); }
    std::vector<size_t> by_length(i64 ell) const;
    bool contains(const SerreWeight& w) const;
};

// Requires 0-generic split inertial data. Throws invariant_error if the
// produced weights are not pairwise distinct. Irreducible inertial data is
// supported only at the counting level (2^f); requesting the constructive
// list for it is a validation error.
WeightSet serre_weights(const InertialData& rho, const Params& P);

// Constituents of the principal series induced from sigma0's character:
// one weight per tuple of enumerate_P_ind, each twisted additionally by
// sigma0's own det power. Exactly 2^f distinct weights, always containing
// sigma0 itself. Requires sigma0 1-generic.
std::vector<SerreWeight> jh_principal_series(const SerreWeight& sigma0, const Params& P);

// Intersection of jh_principal_series(sigma0) with the values of W, for
// sigma0 a length-0 member of W. The expected outcome is {sigma0}.
std::vector<SerreWeight> jh_meets_weightset(const SerreWeight& sigma0, const WeightSet& W,
                                            const Params& P);

// True iff char_of_weight is injective on the values of W.
bool char_injectivity_check(const WeightSet& W, const Params& P);

// Numerical profile of a representation with multiplicity r: dimensions of
// torus-character extension spaces, socle length, and per-character torsion
// multiplicity. The counts are identical for both kinds; the kind is
// recorded as given.
struct HypothesisProfile {
    i64 r = 0;
    i64 f = 0;
    ProfileKind kind = ProfileKind::reducible;
    std::vector<i64> ext_dims; // ext_dims[i] = C(2f, i) * r, 0 <= i <= 2f
    i64 socle_length = 0;      // r * 2^f
    i64 torsion_char_multiplicity = 0; // r, per occurring character
    i64 ext_total = 0;         // 4^f * r
};

HypothesisProfile hypothesis_profile(i64 r, const Params& P, ProfileKind kind);

} // namespace gl2
