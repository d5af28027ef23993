#include "gl2/charcycle.hpp"

#include <algorithm>
#include <set>

#include "gl2/diagram.hpp"

namespace gl2 {

Monomial Monomial::make(i64 f, std::vector<i64> exponents) {
    if (f < 1)
        throw validation_error("f: must be >= 1");
    if (static_cast<i64>(exponents.size()) != 2 * f)
        throw validation_error("monomial: expected " + std::to_string(2 * f) +
                               " exponents, got " + std::to_string(exponents.size()));
    for (size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] < 0)
            throw validation_error("monomial exponent at index " + std::to_string(i) +
                                   " is negative");
    for (i64 i = 0; i < f; ++i)
        if (exponents[static_cast<size_t>(i)] > 0 && exponents[static_cast<size_t>(f + i)] > 0)
            throw validation_error("monomial: y" + std::to_string(i) + " and z" +
                                   std::to_string(i) + " both present; such a monomial is zero");
    Monomial m;
    m.f_ = f;
    m.exps_ = std::move(exponents);
    return m;
}

Monomial Monomial::one(i64 f) {
    return make(f, std::vector<i64>(static_cast<size_t>(2 * f), 0));
}

Monomial Monomial::variable(i64 f, bool z_block, i64 index, i64 exp) {
    if (index < 0 || index >= f)
        throw validation_error("variable index " + std::to_string(index) + " outside [0, f)");
    std::vector<i64> e(static_cast<size_t>(2 * f), 0);
    e[static_cast<size_t>((z_block ? f : 0) + index)] = exp;
    return make(f, std::move(e));
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](i64 e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    if (f_ != other.f_)
        throw validation_error("monomials over different variable sets");
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

MonomialIdeal MonomialIdeal::make(i64 f, std::vector<Monomial> gens) {
    for (const auto& g : gens)
        if (g.f() != f)
            throw validation_error("generator over wrong variable set");
    // Minimalize: drop any generator divisible by another.
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != i && gens[j].divides(gens[i]))
                redundant = true;
        if (!redundant)
            minimal.push_back(gens[i]);
    }
    MonomialIdeal I;
    I.f_ = f;
    I.gens_ = std::move(minimal);
    return I;
}

MonomialIdeal MonomialIdeal::zero(i64 f) {
    return make(f, {});
}

bool MonomialIdeal::contains_one() const {
    return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_one(); });
}

MinimalPrime distinguished_prime(const Params& P) {
    return MinimalPrime{P.f, (u64(1) << P.f) - 1};
}

std::vector<MinimalPrime> minimal_primes(const Params& P) {
    std::vector<MinimalPrime> out;
    for (u64 mask = 0; mask < (u64(1) << P.f); ++mask)
        out.push_back(MinimalPrime{P.f, mask});
    return out;
}

std::string to_string(const MinimalPrime& q) {
    std::string s = "(";
    for (i64 i = 0; i < q.f; ++i) {
        if (i)
            s += ",";
        s += (q.selects_z(i) ? "z" : "y") + std::to_string(i);
    }
    return s + ")";
}

MinimalPrime parse_prime(const std::string& csv, const Params& P) {
    MinimalPrime q{P.f, 0};
    std::vector<bool> seen(static_cast<size_t>(P.f), false);
    size_t start = 0;
    std::string body = csv;
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    while (start <= body.size()) {
        size_t comma = body.find(',', start);
        std::string tok =
            comma == std::string::npos ? body.substr(start) : body.substr(start, comma - start);
        if (tok.size() < 2 || (tok[0] != 'y' && tok[0] != 'z'))
            throw validation_error("prime token '" + tok + "': expected yK or zK");
        i64 idx = 0;
        try {
            idx = std::stoll(tok.substr(1));
        } catch (const std::exception&) {
            throw validation_error("prime token '" + tok + "': bad index");
        }
        if (idx < 0 || idx >= P.f)
            throw validation_error("prime token '" + tok + "': index outside [0, f)");
        if (seen[static_cast<size_t>(idx)])
            throw validation_error("prime: index " + std::to_string(idx) + " selected twice");
        seen[static_cast<size_t>(idx)] = true;
        if (tok[0] == 'z')
            q.mask |= u64(1) << idx;
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw validation_error("prime: exactly one variable per index required");
    return q;
}

std::string to_string(const Monomial& m) {
    if (m.is_one())
        return "1";
    std::string s;
    auto emit = [&](char v, i64 i, i64 e) {
        if (e == 0)
            return;
        if (!s.empty())
            s += "*";
        s += v + std::to_string(i);
        if (e > 1)
            s += "^" + std::to_string(e);
    };
    for (i64 i = 0; i < m.f(); ++i)
        emit('y', i, m.y_exp(i));
    for (i64 i = 0; i < m.f(); ++i)
        emit('z', i, m.z_exp(i));
    return s;
}

Monomial parse_monomial(const std::string& text, const Params& P) {
    if (text == "1")
        return Monomial::one(P.f);
    std::vector<i64> exps(static_cast<size_t>(2 * P.f), 0);
    size_t start = 0;
    while (start <= text.size()) {
        size_t star = text.find('*', start);
        std::string tok =
            star == std::string::npos ? text.substr(start) : text.substr(start, star - start);
        if (tok.size() < 2 || (tok[0] != 'y' && tok[0] != 'z'))
            throw validation_error("monomial token '" + tok + "': expected yK[^E] or zK[^E]");
        size_t caret = tok.find('^');
        i64 idx = 0;
        i64 e = 1;
        try {
            idx = std::stoll(tok.substr(1, caret == std::string::npos ? std::string::npos
                                                                      : caret - 1));
            if (caret != std::string::npos)
                e = std::stoll(tok.substr(caret + 1));
        } catch (const std::exception&) {
            throw validation_error("monomial token '" + tok + "': bad number");
        }
        if (idx < 0 || idx >= P.f)
            throw validation_error("monomial token '" + tok + "': index outside [0, f)");
        if (e < 1)
            throw validation_error("monomial token '" + tok + "': exponent must be >= 1");
        exps[static_cast<size_t>((tok[0] == 'z' ? P.f : 0) + idx)] += e;
        if (star == std::string::npos)
            break;
        start = star + 1;
    }
    return Monomial::make(P.f, std::move(exps));
}

MonomialIdeal parse_ideal(const std::string& text, const Params& P) {
    if (text == "0")
        return MonomialIdeal::zero(P.f);
    std::vector<Monomial> gens;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string tok =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        gens.push_back(parse_monomial(tok, P));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return MonomialIdeal::make(P.f, std::move(gens));
}

i64 mult_at_prime(const MonomialIdeal& I, const MinimalPrime& q) {
    if (I.f() != q.f)
        throw validation_error("ideal and prime over different variable sets");
    if (I.contains_one())
        throw validation_error("mult_at_prime: unit ideal (zero module)");
    for (const auto& g : I.generators()) {
        bool divisible_by_selected = false;
        for (i64 i = 0; i < q.f && !divisible_by_selected; ++i) {
            i64 e = q.selects_z(i) ? g.z_exp(i) : g.y_exp(i);
            divisible_by_selected = e > 0;
        }
        if (!divisible_by_selected)
            return 0; // generator becomes a unit after localization
    }
    return 1;
}

i64 CycleVector::total() const {
    i64 t = 0;
    for (i64 v : coeffs_)
        t += v;
    return t;
}

bool CycleVector::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](i64 v) { return v == 0; });
}

CycleVector cycle_add(const CycleVector& a, const CycleVector& b) {
    if (a.f() != b.f())
        throw validation_error("cycles over different prime sets");
    CycleVector out = a;
    for (size_t i = 0; i < out.coeffs().size(); ++i)
        out.coeff(MinimalPrime{a.f(), static_cast<u64>(i)}) += b.coeffs()[i];
    return out;
}

CycleVector cycle_sub(const CycleVector& a, const CycleVector& b) {
    if (a.f() != b.f())
        throw validation_error("cycles over different prime sets");
    CycleVector out = a;
    for (size_t i = 0; i < out.coeffs().size(); ++i) {
        i64 v = a.coeffs()[i] - b.coeffs()[i];
        if (v < 0)
            throw arithmetic_error("cycle_sub: negative coefficient at " +
                                   to_string(MinimalPrime{a.f(), static_cast<u64>(i)}) +
                                   "; the difference is not an effective cycle");
        out.coeff(MinimalPrime{a.f(), static_cast<u64>(i)}) = v;
    }
    return out;
}

CycleVector char_cycle(const ModuleSpec& N, const Params& P) {
    CycleVector out(P.f);
    if (!N.filtration.empty()) {
        for (const auto& layer : N.filtration)
            out = cycle_add(out, char_cycle(layer, P));
        return out;
    }
    for (const auto& s : N.summands) {
        if (s.multiplicity < 1)
            throw validation_error("module summand multiplicity must be >= 1");
        for (const auto& q : minimal_primes(P))
            out.coeff(q) += s.multiplicity * mult_at_prime(s.ideal, q);
    }
    return out;
}

i64 profile_p0_multiplicity(const SubrepProfile& prof, const Params& P) {
    validate_profile(prof, P);
    if (prof.kind != ProfileKind::reducible)
        throw validation_error("profile_p0_multiplicity: profile must be reducible");
    // Route one: walk the tuple sets; a tuple contributes dim V(length)
    // exactly when it carries multiplicity 1 at the distinguished prime,
    // which happens on the weight-set family and nowhere else.
    std::set<AffineTuple> weight_family;
    for (const auto& t : enumerate_D(P))
        weight_family.insert(t);
    std::set<AffineTuple> all;
    all.insert(weight_family.begin(), weight_family.end());
    for (const auto& t : enumerate_P_ind(P))
        all.insert(t);
    i64 total = 0;
    for (const auto& t : all) {
        i64 indicator = weight_family.count(t) ? 1 : 0;
        if (indicator == 0)
            continue;
        i64 ell = tuple_length(t, P);
        total += prof.spaces[static_cast<size_t>(ell)].dim();
    }
    // Route two: the binomial-weighted dimension count. The two must agree.
    i64 via_socle = soc_length(prof, P);
    if (total != via_socle)
        throw invariant_error("profile multiplicity at the distinguished prime (" +
                              std::to_string(total) + ") disagrees with socle length (" +
                              std::to_string(via_socle) + ")");
    return total;
}

} // namespace gl2
