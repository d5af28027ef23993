#pragma once

#include "gl2/lattice.hpp"

namespace gl2 {

// A monomial in y_0..y_{f-1}, z_0..z_{f-1}. A factor y_i z_i vanishes in
// the quotient ring, so monomials carrying both variables of one index are
// rejected at construction instead of being silently reduced to zero.
class Monomial {
public:
    static Monomial make(i64 f, std::vector<i64> exponents); // size 2f: y block, z block
    static Monomial one(i64 f);
    static Monomial variable(i64 f, bool z_block, i64 index, i64 exp = 1);

    i64 f() const { return f_; }
    const std::vector<i64>& exponents() const { return exps_; }
    i64 y_exp(i64 i) const { return exps_[static_cast<size_t>(i)]; }
    i64 z_exp(i64 i) const { return exps_[static_cast<size_t>(f_ + i)]; }

    bool is_one() const;
    bool divides(const Monomial& other) const;

    auto operator<=>(const Monomial&) const = default;

private:
    Monomial() = default;
    i64 f_ = 0;
    std::vector<i64> exps_;
};

// A minimal generating set: pairwise non-dividing, sorted.
class MonomialIdeal {
public:
    static MonomialIdeal make(i64 f, std::vector<Monomial> gens);
    static MonomialIdeal zero(i64 f); // the zero ideal (0)

    i64 f() const { return f_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool contains_one() const;

    auto operator<=>(const MonomialIdeal&) const = default;

private:
    MonomialIdeal() = default;
    i64 f_ = 0;
    std::vector<Monomial> gens_;
};

// One of the 2^f height-zero primes: one variable selected per index. Bit i
// of `mask` set means z_i is selected. The distinguished prime selects
// every z_i (mask of all ones).
struct MinimalPrime {
    i64 f = 0;
    u64 mask = 0;

    bool selects_z(i64 i) const { return (mask >> i) & 1; }
    bool is_distinguished() const { return mask == (u64(1) << f) - 1; }

    auto operator<=>(const MinimalPrime&) const = default;
};

MinimalPrime distinguished_prime(const Params& P); // all-z
std::vector<MinimalPrime> minimal_primes(const Params& P);
std::string to_string(const MinimalPrime& q);
MinimalPrime parse_prime(const std::string& csv, const Params& P);
std::string to_string(const Monomial& m);
Monomial parse_monomial(const std::string& text, const Params& P);
MonomialIdeal parse_ideal(const std::string& text, const Params& P);

// Multiplicity of the cyclic module R/I at q, always 0 or 1: localizing
// inverts the unselected variables, which kills all selected-variable
// multiples, so the module survives iff every generator is divisible by
// some selected variable (I contained in q). Throws for the unit ideal.
i64 mult_at_prime(const MonomialIdeal& I, const MinimalPrime& q);

// A finitely presented module: cyclic pieces R/I with multiplicities, or a
// filtration whose layers are themselves module specs (the cycle is then
// the sum over layers).
struct ModuleSpec {
    struct Summand {
        MonomialIdeal ideal;
        i64 multiplicity = 1;
        std::string label; // opaque grading/twist tag, never used in arithmetic
    };
    std::vector<Summand> summands;
    std::vector<ModuleSpec> filtration;
};

// Formal nonnegative combination of the 2^f minimal primes; coefficients
// indexed by prime mask.
class CycleVector {
public:
    explicit CycleVector(i64 f) : f_(f), coeffs_(size_t(1) << f, 0) {}

    i64 f() const { return f_; }
    i64 coeff(const MinimalPrime& q) const { return coeffs_[static_cast<size_t>(q.mask)]; }
    i64& coeff(const MinimalPrime& q) { return coeffs_[static_cast<size_t>(q.mask)]; }
    const std::vector<i64>& coeffs() const { return coeffs_; }
    i64 total() const;
    bool is_zero() const;

    bool operator==(const CycleVector&) const = default;

private:
    i64 f_;
    std::vector<i64> coeffs_;
};

CycleVector cycle_add(const CycleVector& a, const CycleVector& b);
// Pointwise difference; throws arithmetic_error naming the first prime
// whose coefficient would go negative.
CycleVector cycle_sub(const CycleVector& a, const CycleVector& b);

CycleVector char_cycle(const ModuleSpec& N, const Params& P);

// Multiplicity of a profile at the distinguished prime, computed through
// the tuple parametrization: each weight-set tuple of length l contributes
// dim V(l). Cross-checked against soc_length (the two routes must agree;
// disagreement throws invariant_error).
i64 profile_p0_multiplicity(const SubrepProfile& prof, const Params& P);

} // namespace gl2
