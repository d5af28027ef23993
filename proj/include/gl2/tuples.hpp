#pragma once

#include <span>
#include <string>
#include <vector>

#include "gl2/weights.hpp"

namespace gl2 {

// One affine form sign*x + offset in a positional variable x_i that is
// never materialized.
struct AffineForm {
    int sign = 1; // +1 or -1
    i64 offset = 0;

    i64 eval(i64 x) const { return sign * x + offset; }
    auto operator<=>(const AffineForm&) const = default;
};

// An f-tuple of affine forms; equality is exact componentwise equality.
struct AffineTuple {
    std::vector<AffineForm> forms;

    auto operator<=>(const AffineTuple&) const = default;
};

AffineTuple identity_tuple(i64 f);

void validate_tuple(const AffineTuple& t, const Params& P);

std::vector<i64> eval_tuple(const AffineTuple& t, std::span<const i64> r);

// Determinant twist e(t)(r): half of sum p^i (r_i - t_i(r_i)), shifted by
// q-1 when the last form has negative sign, reduced to [0, q-1). Throws
// arithmetic_error if the numerator is odd rather than rounding.
i64 e_twist(const AffineTuple& t, std::span<const i64> r, const Params& P);

// The Serre weight (t_0(r_0), ..., t_{f-1}(r_{f-1})) (x) det^{e(t)(r)}.
// Every evaluated digit must land in [0, p-1].
SerreWeight weight_of_tuple(const AffineTuple& t, std::span<const i64> r, const Params& P);

// The 2^f tuples of the weight-set parametrization. Each position carries a
// class A = {x, x+1} or B = {p-2-x, p-3-x}; the representative at position
// i is pinned by the class at position i-1 (cyclically): predecessor A
// picks {x, p-2-x}, predecessor B picks {x+1, p-3-x}. For f = 1 the
// listing is {x, p-3-x}, which agrees with the cyclic rule. Output sorted
// by display order (plus-sign forms first).
std::vector<AffineTuple> enumerate_D(const Params& P);

// The 2^f tuples parametrizing principal-series constituents. Classes
// A = {x, x-1}, B = {p-2-x, p-1-x}; predecessor A picks {x, p-2-x},
// predecessor B picks {x-1, p-1-x}. For f = 1: {x, p-1-x}.
std::vector<AffineTuple> enumerate_P_ind(const Params& P);

// Positions whose form is one of x+1, x+2, p-3-x (exact membership).
std::vector<int> j_set(const AffineTuple& t, const Params& P);

inline i64 tuple_length(const AffineTuple& t, const Params& P) {
    return static_cast<i64>(j_set(t, P).size());
}

// Exact set intersection: enumerate_P_ind meets enumerate_D in the identity
// tuple alone.
bool check_intersection(const Params& P);

// Display tokens: "x+0", "x+1", "x-1", "P-2-x", ... (symbolic P for p).
std::string to_string(const AffineForm& a, const Params& P);
std::string to_string(const AffineTuple& t, const Params& P);
AffineForm parse_form(const std::string& token, const Params& P);
AffineTuple parse_tuple(const std::string& csv, const Params& P);

// Display order: plus-sign forms by offset, then minus-sign forms by p-offset.
bool display_less(const AffineTuple& a, const AffineTuple& b, const Params& P);

} // namespace gl2
