#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gl2/params.hpp"

namespace gl2 {

// A Serre weight (r_0, ..., r_{f-1}) (x) det^m with 0 <= r_i <= p-1 and the
// twist reduced to [0, q-1). Equality is componentwise; weights are never
// identified across the (0,...,0) / (p-1,...,p-1) boundary.
struct SerreWeight {
    std::vector<i64> digits;
    i64 twist = 0;

    auto operator<=>(const SerreWeight&) const = default;
};

// Character of the finite torus, diag(a, d) |-> a^a_exp d^d_exp, both
// exponents stored canonically in [0, q-1).
struct ToralCharacter {
    i64 a_exp = 0;
    i64 d_exp = 0;

    auto operator<=>(const ToralCharacter&) const = default;
};

enum class InertialKind {
    reducible_split, // split shape, fundamental character of level f
    irreducible,     // diagonal shape, fundamental character of level 2f
};

// Shape tag shared by hypothesis profiles and subrepresentation profiles.
enum class ProfileKind { reducible, irreducible };

// Inertial parameters of a Galois representation: digit vector, the shape
// the digits are read off from, and a determinant twist that the
// combinatorics never consumes.
//
// Note on labels: sources disagree on which of the two shapes carries the
// name "reducible"; the genericity windows here are keyed to the stored
// kind (split shape: symmetric window plus two excluded constant vectors;
// diagonal shape: asymmetric window on the first digit), not to the label.
struct InertialData {
    std::vector<i64> digits;
    InertialKind kind = InertialKind::reducible_split;
    i64 twist = 0;
};

void validate_weight(const SerreWeight& w, const Params& P);
void validate_inertial(const InertialData& rho, const Params& P);

// Character of the torus action on the one-dimensional space of
// pro-p-Iwahori invariants: (sum r_i p^i + m, m) mod q-1.
ToralCharacter char_of_weight(const SerreWeight& w, const Params& P);

// Conjugation by the normalizer element swapping the diagonal entries.
ToralCharacter conj_s(const ToralCharacter& chi);

// The unique weight distinct from w whose character is conj_s of w's
// character. Closed form: digits p-1-r_i, twist m + sum r_i p^i. Rejects
// the constant-0 / constant-(p-1) weights, whose character is swap-fixed;
// every 1-generic weight and its partner are accepted, making this an
// involution on 1-generic weights. The postcondition is asserted in debug
// builds.
SerreWeight weight_s(const SerreWeight& w, const Params& P);

// n <= r_i <= p-2-n for every digit.
bool is_weight_generic(const SerreWeight& w, i64 n, const Params& P);

// Split shape: n <= r_j <= p-3-n for all j and digits not constant 0 or
// constant p-3. Diagonal shape: n+1 <= r_0 <= p-2-n, and n <= r_j <= p-3-n
// for j > 0.
bool is_inertial_generic(const InertialData& rho, i64 n, const Params& P);

// Statements with a pinned genericity threshold, named by what they assert.
enum class Statement {
    graded_presentation,
    socle_dimension,
    socle_generation,
    ps_splitting,
    cohen_macaulay,
    finite_length,
    lattice_model,
    torsion_exactness,
    torsion_structure,
    invariants_exactness,
    subquotient_counting,
    supersingularity,
    global_finite_length,
    global_hypotheses,
};

// Threshold table:
//   graded_presentation                      -> 9
//   socle_dimension/socle_generation/
//   ps_splitting                             -> 2f
//   cohen_macaulay/finite_length/
//   lattice_model/torsion_exactness/
//   torsion_structure/invariants_exactness/
//   subquotient_counting/supersingularity    -> max(9, 2f+1)
//   global_finite_length                     -> max(12, 2f+1)
//   global_hypotheses                        -> 12
i64 required_genericity(Statement s, const Params& P);

const std::vector<Statement>& all_statements();
std::string statement_name(Statement s);
Statement parse_statement(const std::string& name); // throws validation_error

// Strict digit window under which the global finite-length statement
// applies: max(12, 2f+1) < r < p - max(15, 2f+4).
struct Window {
    i64 lo = 0; // exclusive
    i64 hi = 0; // exclusive
    bool contains(i64 r) const { return lo < r && r < hi; }
};
Window global_genericity_window(const Params& P);

std::string to_string(const SerreWeight& w);
std::string to_string(const ToralCharacter& chi);

} // namespace gl2
