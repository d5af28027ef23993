#include "gl2/weights.hpp"

#include <algorithm>
#include <cassert>

namespace gl2 {

Params make_params(i64 p, i64 f) {
    if (p == 2)
        throw validation_error("p: must be odd, got 2");
    if (p < 3 || !is_prime_u64(static_cast<u64>(p)))
        throw validation_error("p: not prime (" + std::to_string(p) + ")");
    if (f < 1)
        throw validation_error("f: must be >= 1, got " + std::to_string(f));
    Params P;
    P.p = p;
    P.f = f;
    P.q = checked_pow(p, f);
    return P;
}

void validate_weight(const SerreWeight& w, const Params& P) {
    if (static_cast<i64>(w.digits.size()) != P.f)
        throw validation_error("digits: expected " + std::to_string(P.f) + " entries, got " +
                               std::to_string(w.digits.size()));
    for (size_t i = 0; i < w.digits.size(); ++i) {
        if (w.digits[i] < 0 || w.digits[i] > P.p - 1)
            throw validation_error("digits[" + std::to_string(i) + "]: " +
                                   std::to_string(w.digits[i]) + " outside [0, p-1]");
    }
    if (w.twist < 0 || w.twist >= P.qm1())
        throw validation_error("twist: " + std::to_string(w.twist) + " outside [0, q-1)");
}

void validate_inertial(const InertialData& rho, const Params& P) {
    if (static_cast<i64>(rho.digits.size()) != P.f)
        throw validation_error("r_digits: expected " + std::to_string(P.f) + " entries, got " +
                               std::to_string(rho.digits.size()));
    if (rho.twist < 0 || rho.twist >= P.qm1())
        throw validation_error("twist: " + std::to_string(rho.twist) + " outside [0, q-1)");
}

ToralCharacter char_of_weight(const SerreWeight& w, const Params& P) {
    validate_weight(w, P);
    i128 s = 0;
    i128 pw = 1;
    for (i64 i = 0; i < P.f; ++i) {
        s += pw * w.digits[static_cast<size_t>(i)];
        pw *= P.p;
    }
    ToralCharacter chi;
    chi.a_exp = mod_reduce(s + w.twist, P.qm1());
    chi.d_exp = mod_reduce(w.twist, P.qm1());
    return chi;
}

ToralCharacter conj_s(const ToralCharacter& chi) {
    return ToralCharacter{chi.d_exp, chi.a_exp};
}

SerreWeight weight_s(const SerreWeight& w, const Params& P) {
    validate_weight(w, P);
    // The partner is pinned down by the swapped character exactly when the
    // character is not swap-fixed, i.e. away from the constant-0 /
    // constant-(p-1) boundary pair. 1-generic weights and their partners
    // both satisfy this.
    bool all_zero = std::all_of(w.digits.begin(), w.digits.end(), [](i64 r) { return r == 0; });
    bool all_top =
        std::all_of(w.digits.begin(), w.digits.end(), [&](i64 r) { return r == P.p - 1; });
    if (all_zero || all_top)
        throw validation_error(
            "weight_s: boundary weight has a swap-fixed character; the partner is ambiguous");
    SerreWeight out;
    out.digits.reserve(w.digits.size());
    i128 s = 0;
    i128 pw = 1;
    for (i64 i = 0; i < P.f; ++i) {
        out.digits.push_back(P.p - 1 - w.digits[static_cast<size_t>(i)]);
        s += pw * w.digits[static_cast<size_t>(i)];
        pw *= P.p;
    }
    out.twist = mod_reduce(s + w.twist, P.qm1());
    assert(char_of_weight(out, P) == conj_s(char_of_weight(w, P)));
    assert(!(out == w));
    return out;
}

bool is_weight_generic(const SerreWeight& w, i64 n, const Params& P) {
    if (n < 0)
        throw validation_error("n: must be >= 0");
    return std::all_of(w.digits.begin(), w.digits.end(),
                       [&](i64 r) { return n <= r && r <= P.p - 2 - n; });
}

bool is_inertial_generic(const InertialData& rho, i64 n, const Params& P) {
    if (n < 0)
        throw validation_error("n: must be >= 0");
    validate_inertial(rho, P);
    const auto& r = rho.digits;
    if (rho.kind == InertialKind::reducible_split) {
        for (i64 v : r)
            if (v < n || v > P.p - 3 - n)
                return false;
        bool all_zero = std::all_of(r.begin(), r.end(), [](i64 v) { return v == 0; });
        bool all_top = std::all_of(r.begin(), r.end(), [&](i64 v) { return v == P.p - 3; });
        return !all_zero && !all_top;
    }
    if (r[0] < n + 1 || r[0] > P.p - 2 - n)
        return false;
    for (size_t j = 1; j < r.size(); ++j)
        if (r[j] < n || r[j] > P.p - 3 - n)
            return false;
    return true;
}

i64 required_genericity(Statement s, const Params& P) {
    const i64 f = P.f;
    switch (s) {
    case Statement::graded_presentation:
        return 9;
    case Statement::socle_dimension:
    case Statement::socle_generation:
    case Statement::ps_splitting:
        return 2 * f;
    case Statement::cohen_macaulay:
    case Statement::finite_length:
    case Statement::lattice_model:
    case Statement::torsion_exactness:
    case Statement::torsion_structure:
    case Statement::invariants_exactness:
    case Statement::subquotient_counting:
    case Statement::supersingularity:
        return std::max<i64>(9, 2 * f + 1);
    case Statement::global_finite_length:
        return std::max<i64>(12, 2 * f + 1);
    case Statement::global_hypotheses:
        return 12;
    }
    throw validation_error("statement: unknown id");
}

const std::vector<Statement>& all_statements() {
    static const std::vector<Statement> all = {
        Statement::graded_presentation,  Statement::socle_dimension,
        Statement::socle_generation,     Statement::ps_splitting,
        Statement::cohen_macaulay,       Statement::finite_length,
        Statement::lattice_model,        Statement::torsion_exactness,
        Statement::torsion_structure,    Statement::invariants_exactness,
        Statement::subquotient_counting, Statement::supersingularity,
        Statement::global_finite_length, Statement::global_hypotheses,
    };
    return all;
}

std::string statement_name(Statement s) {
    switch (s) {
    case Statement::graded_presentation: return "graded-presentation";
    case Statement::socle_dimension: return "socle-dimension";
    case Statement::socle_generation: return "socle-generation";
    case Statement::ps_splitting: return "ps-splitting";
    case Statement::cohen_macaulay: return "cohen-macaulay";
    case Statement::finite_length: return "finite-length";
    case Statement::lattice_model: return "lattice-model";
    case Statement::torsion_exactness: return "torsion-exactness";
    case Statement::torsion_structure: return "torsion-structure";
    case Statement::invariants_exactness: return "invariants-exactness";
    case Statement::subquotient_counting: return "subquotient-counting";
    case Statement::supersingularity: return "supersingularity";
    case Statement::global_finite_length: return "global-finite-length";
    case Statement::global_hypotheses: return "global-hypotheses";
    }
    return "?";
}

Statement parse_statement(const std::string& name) {
    for (Statement s : all_statements())
        if (statement_name(s) == name)
            return s;
    throw validation_error("statement: unknown id '" + name + "'");
}

Window global_genericity_window(const Params& P) {
    Window w;
    w.lo = std::max<i64>(12, 2 * P.f + 1);
    w.hi = P.p - std::max<i64>(15, 2 * P.f + 4);
    return w;
}

std::string to_string(const SerreWeight& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.digits.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(w.digits[i]);
    }
    s += ")*det^" + std::to_string(w.twist);
    return s;
}

std::string to_string(const ToralCharacter& chi) {
    return "(" + std::to_string(chi.a_exp) + "," + std::to_string(chi.d_exp) + ")";
}

} // namespace gl2
