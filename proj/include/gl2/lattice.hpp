#pragma once

#include <array>
#include <optional>
#include <random>

#include "gl2/weights.hpp"

namespace gl2 {

// A subspace of F_c^ambient held as a reduced row-echelon basis. Two
// subspaces are equal iff their canonical bases are identical. The
// coefficient field is a small prime field, independent of the weight
// prime p: everything downstream depends only on dimensions and on the
// inclusion lattice.
class Subspace {
public:
    Subspace(i64 c, i64 ambient) : c_(c), ambient_(ambient) {}

    static Subspace zero(i64 c, i64 ambient);
    static Subspace full(i64 c, i64 ambient);
    // Span of the first k standard basis vectors.
    static Subspace standard_prefix(i64 c, i64 ambient, i64 k);
    // Span of arbitrary rows, canonicalized.
    static Subspace span_of(i64 c, i64 ambient, std::vector<std::vector<i64>> rows);

    i64 field() const { return c_; }
    i64 ambient() const { return ambient_; }
    i64 dim() const { return static_cast<i64>(rows_.size()); }
    const std::vector<std::vector<i64>>& basis() const { return rows_; }

    bool contains_vector(const std::vector<i64>& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace&) const = default;
    bool operator<(const Subspace& o) const { return rows_ < o.rows_; }

private:
    i64 c_;
    i64 ambient_;
    std::vector<std::vector<i64>> rows_;
};

struct SubspaceAlgebra {
    Subspace sum;
    Subspace intersection;
    std::array<i64, 4> dims; // dim A, dim B, dim(A+B), dim(A cap B)
};

// Sum and intersection in canonical form; the modular law
// dim(A+B) + dim(A cap B) = dim A + dim B holds by construction.
SubspaceAlgebra subspace_algebra(const Subspace& A, const Subspace& B);

// Subspace-tuple model of a subrepresentation: f+1 spaces graded by length
// for the reducible shape, a single space for the irreducible one. All
// spaces share one ambient dimension (the multiplicity).
struct SubrepProfile {
    ProfileKind kind = ProfileKind::reducible;
    std::vector<Subspace> spaces;

    static SubrepProfile zero(ProfileKind kind, i64 f, i64 c, i64 ambient);
    static SubrepProfile full(ProfileKind kind, i64 f, i64 c, i64 ambient);
    static SubrepProfile from_dims(ProfileKind kind, i64 f, i64 c, i64 ambient,
                                   const std::vector<i64>& dims);

    i64 ambient() const { return spaces.empty() ? 0 : spaces.front().ambient(); }
    i64 field() const { return spaces.empty() ? 0 : spaces.front().field(); }
    std::vector<i64> dims() const;
};

void validate_profile(const SubrepProfile& prof, const Params& P);

// Index of the first length with inner(l) not contained in outer(l), if any.
std::optional<size_t> containment_violation(const SubrepProfile& outer,
                                            const SubrepProfile& inner);

// Number of irreducible socle constituents, counted with multiplicity:
// sum_l dim V(l) * C(f, l) for the reducible shape, dim V * 2^f for the
// irreducible one.
i64 soc_length(const SubrepProfile& prof, const Params& P);

// Dimension of the associated etale module over the Laurent-series field;
// coincides with soc_length and is exposed under both names.
i64 phi_gamma_dim(const SubrepProfile& prof, const Params& P);

// Upper bound for the length of the quotient outer/inner: the total
// dimension gap. Specializes to r*(f+1) (reducible, zero to full) and r
// (irreducible).
i64 length_bound(const SubrepProfile& outer, const SubrepProfile& inner, const Params& P);

// Profile of the quotient: at each length, a deterministically chosen
// complement of inner in outer (greedy extension of the inner basis by the
// earliest basis vectors of outer). The splitting is not canonical; this
// fixes one reproducibly.
SubrepProfile quotient_profile(const SubrepProfile& outer, const SubrepProfile& inner);

// soc_length(inner) + soc_length(quotient) == soc_length(outer); true by
// construction, exposed as a regression assertion.
bool socle_additivity_check(const SubrepProfile& outer, const SubrepProfile& inner,
                            const Params& P);

// All subspaces of F_c^ambient, by echelon-form enumeration.
std::vector<Subspace> enumerate_subspaces(i64 c, i64 ambient);
// All subspaces W with inner <= W <= outer.
std::vector<Subspace> enumerate_between(const Subspace& inner, const Subspace& outer);

Subspace random_subspace(std::mt19937_64& rng, i64 c, i64 ambient);
Subspace random_subspace_of(std::mt19937_64& rng, const Subspace& outer);
SubrepProfile random_profile(std::mt19937_64& rng, ProfileKind kind, i64 f, i64 c, i64 ambient);
// A uniform-ish random profile nested inside `outer`.
SubrepProfile random_subprofile(std::mt19937_64& rng, const SubrepProfile& outer);

struct ChainBoundReport {
    i64 bound = 0;        // sum of dimension gaps
    i64 longest_found = 0;
    bool achieved = false; // a chain of exactly `bound` strict steps exists
    bool exceeded = false; // a longer chain was found (falsifies the model)
    bool exhaustive = false;

    bool ok() const { return achieved && !exceeded; }
};

ChainBoundReport chain_bound_exhaustive(const SubrepProfile& inner, const SubrepProfile& outer,
                                        const Params& P);
ChainBoundReport chain_bound_randomized(const SubrepProfile& inner, const SubrepProfile& outer,
                                        const Params& P, i64 trials, std::mt19937_64& rng);

// Verifies, exhaustively at tiny sizes and by randomized search otherwise,
// that strict chains between nested profiles never exceed the dimension-gap
// bound and that saturated chains attain it. Covers zero-to-full for both
// shapes, the principal-series remainder interval, and random nested pairs.
bool max_chain_check(const Params& P, i64 r, i64 c, i64 trials, u64 seed);

// Decomposition shape of a full reducible profile: multiplicity r at
// length 0 and length f, plus a remainder supported on 0 < l < f.
struct PsDecomposition {
    i64 multiplicity = 0;       // r, at length 0 and at length f
    SubrepProfile remainder;    // V(0) = V(f) = 0, full in between
    i64 remainder_bound = 0;    // r * (f - 1)
    i64 remainder_socle = 0;    // r * (2^f - 2)
};

PsDecomposition ps_decomposition(const SubrepProfile& prof, i64 r, const Params& P);

} // namespace gl2
