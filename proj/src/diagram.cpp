#include "gl2/diagram.hpp"

#include <algorithm>
#include <set>

namespace gl2 {

std::vector<size_t> WeightSet::by_length(i64 ell) const {
    std::vector<size_t> idx;
    for (size_t i = 0; i < lengths.size(); ++i)
        if (lengths[i] == ell)
            idx.push_back(i);
    return idx;
}

bool WeightSet::contains(const SerreWeight& w) const {
    return std::find(weights.begin(), weights.end(), w) != weights.end();
}

WeightSet serre_weights(const InertialData& rho, const Params& P) {
    if (rho.kind != InertialKind::reducible_split)
        throw validation_error(
            "serre_weights: constructive weight list exists only for split inertial data; "
            "irreducible data is handled at the counting level (2^f)");
    if (!is_inertial_generic(rho, 0, P))
        throw validation_error("serre_weights: inertial data must be 0-generic");
    WeightSet W;
    W.tuples = enumerate_D(P);
    W.weights.reserve(W.tuples.size());
    W.lengths.reserve(W.tuples.size());
    for (const auto& t : W.tuples) {
        W.weights.push_back(weight_of_tuple(t, rho.digits, P));
        W.lengths.push_back(tuple_length(t, P));
    }
    std::set<SerreWeight> distinct(W.weights.begin(), W.weights.end());
    if (distinct.size() != W.weights.size())
        throw invariant_error("serre_weights: weight collision on 0-generic inertial data");
    return W;
}

std::vector<SerreWeight> jh_principal_series(const SerreWeight& sigma0, const Params& P) {
    validate_weight(sigma0, P);
    if (!is_weight_generic(sigma0, 1, P))
        throw validation_error("jh_principal_series: weight must be 1-generic");
    std::vector<SerreWeight> out;
    for (const auto& t : enumerate_P_ind(P)) {
        SerreWeight w = weight_of_tuple(t, sigma0.digits, P);
        w.twist = mod_reduce(static_cast<i128>(w.twist) + sigma0.twist, P.qm1());
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<SerreWeight> jh_meets_weightset(const SerreWeight& sigma0, const WeightSet& W,
                                            const Params& P) {
    bool found = false;
    for (size_t i = 0; i < W.size(); ++i) {
        if (W.weights[i] == sigma0) {
            if (W.lengths[i] != 0)
                throw validation_error("jh_meets_weightset: weight has length " +
                                       std::to_string(W.lengths[i]) + ", expected 0");
            found = true;
        }
    }
    if (!found)
        throw validation_error("jh_meets_weightset: weight not a member of the weight set");
    std::set<SerreWeight> values(W.weights.begin(), W.weights.end());
    std::vector<SerreWeight> out;
    for (const auto& w : jh_principal_series(sigma0, P))
        if (values.count(w))
            out.push_back(w);
    return out;
}

bool char_injectivity_check(const WeightSet& W, const Params& P) {
    std::set<ToralCharacter> seen;
    for (const auto& w : W.weights)
        if (!seen.insert(char_of_weight(w, P)).second)
            return false;
    return true;
}

HypothesisProfile hypothesis_profile(i64 r, const Params& P, ProfileKind kind) {
    if (r < 1)
        throw validation_error("r: must be >= 1, got " + std::to_string(r));
    HypothesisProfile h;
    h.r = r;
    h.f = P.f;
    h.kind = kind;
    i128 total = 0;
    for (i64 i = 0; i <= 2 * P.f; ++i) {
        i64 d = binomial(2 * P.f, i);
        if (static_cast<i128>(d) * r > (i128(1) << 62))
            throw validation_error("ext dimension overflows at i=" + std::to_string(i));
        h.ext_dims.push_back(d * r);
        total += d * r;
    }
    if (total > (i128(1) << 62))
        throw validation_error("ext total overflows");
    h.ext_total = static_cast<i64>(total);
    h.socle_length = checked_pow(2, P.f) * r;
    h.torsion_char_multiplicity = r;
    return h;
}

} // namespace gl2
