#include "gl2/oracles.hpp"

#include <algorithm>
#include <array>

namespace gl2::oracle {

namespace {

bool form_is(const AffineForm& a, int sign, i64 offset) {
    return a.sign == sign && a.offset == offset;
}

template <typename Alphabet, typename Cond>
std::vector<AffineTuple> filter_candidates(const Params& P, const Alphabet& alphabet,
                                           Cond transition_ok) {
    const i64 f = P.f;
    std::vector<AffineTuple> out;
    u64 total = 1;
    for (i64 i = 0; i < f; ++i)
        total *= 4;
    for (u64 code = 0; code < total; ++code) {
        AffineTuple t;
        u64 x = code;
        for (i64 i = 0; i < f; ++i) {
            t.forms.push_back(alphabet[x % 4]);
            x /= 4;
        }
        bool ok = true;
        for (i64 i = 0; i < f && ok; ++i)
            ok = transition_ok(t.forms[static_cast<size_t>(i)],
                               t.forms[static_cast<size_t>((i + 1) % f)]);
        if (ok)
            out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(),
              [&](const AffineTuple& a, const AffineTuple& b) { return display_less(a, b, P); });
    return out;
}

} // namespace

std::vector<AffineTuple> enumerate_D_bruteforce(const Params& P) {
    const i64 p = P.p;
    const std::array<AffineForm, 4> alphabet = {AffineForm{1, 0}, AffineForm{1, 1},
                                                AffineForm{-1, p - 2}, AffineForm{-1, p - 3}};
    return filter_candidates(P, alphabet, [&](const AffineForm& a, const AffineForm& b) {
        if (form_is(a, 1, 0) || form_is(a, 1, 1))
            return form_is(b, 1, 0) || form_is(b, -1, p - 2);
        return form_is(b, -1, p - 3) || form_is(b, 1, 1);
    });
}

std::vector<AffineTuple> enumerate_P_bruteforce(const Params& P) {
    const i64 p = P.p;
    const std::array<AffineForm, 4> alphabet = {AffineForm{1, 0}, AffineForm{1, -1},
                                                AffineForm{-1, p - 2}, AffineForm{-1, p - 1}};
    return filter_candidates(P, alphabet, [&](const AffineForm& a, const AffineForm& b) {
        if (form_is(a, 1, 0) || form_is(a, 1, -1))
            return form_is(b, 1, 0) || form_is(b, -1, p - 2);
        return form_is(b, -1, p - 1) || form_is(b, 1, -1);
    });
}

SerreWeight weight_s_bruteforce(const SerreWeight& w, const Params& P) {
    ToralCharacter target = conj_s(char_of_weight(w, P));
    // The twist is pinned by the second exponent; search the digit vectors.
    std::vector<SerreWeight> matches;
    std::vector<i64> digits(static_cast<size_t>(P.f), 0);
    while (true) {
        SerreWeight cand{digits, target.d_exp};
        if (char_of_weight(cand, P) == target && !(cand == w))
            matches.push_back(cand);
        size_t i = 0;
        while (i < digits.size() && ++digits[i] == P.p) {
            digits[i] = 0;
            ++i;
        }
        if (i == digits.size())
            break;
    }
    if (matches.size() != 1)
        throw invariant_error("character search found " + std::to_string(matches.size()) +
                              " partner weights, expected exactly 1");
    return matches.front();
}

i64 count_generic_weights_bruteforce(const Params& P, i64 n) {
    i64 count = 0;
    std::vector<i64> digits(static_cast<size_t>(P.f), 0);
    while (true) {
        SerreWeight w{digits, 0};
        if (is_weight_generic(w, n, P))
            ++count;
        size_t i = 0;
        while (i < digits.size() && ++digits[i] == P.p) {
            digits[i] = 0;
            ++i;
        }
        if (i == digits.size())
            break;
    }
    return count * P.qm1();
}

i64 mult_at_prime_saturation(const MonomialIdeal& I, const MinimalPrime& q) {
    if (I.contains_one())
        throw validation_error("mult_at_prime_saturation: unit ideal");
    std::vector<Monomial> stripped;
    for (const auto& g : I.generators()) {
        std::vector<i64> e = g.exponents();
        for (i64 i = 0; i < q.f; ++i) {
            if (q.selects_z(i))
                e[static_cast<size_t>(i)] = 0; // y_i inverted
            else
                e[static_cast<size_t>(q.f + i)] = 0; // z_i inverted
        }
        stripped.push_back(Monomial::make(q.f, std::move(e)));
    }
    MonomialIdeal sat = MonomialIdeal::make(q.f, std::move(stripped));
    return sat.contains_one() ? 0 : 1;
}

SerreWeight random_weight(std::mt19937_64& rng, const Params& P) {
    std::uniform_int_distribution<i64> digit(0, P.p - 1);
    std::uniform_int_distribution<i64> twist(0, P.qm1() - 1);
    SerreWeight w;
    for (i64 i = 0; i < P.f; ++i)
        w.digits.push_back(digit(rng));
    w.twist = twist(rng);
    return w;
}

SerreWeight random_generic_weight(std::mt19937_64& rng, const Params& P, i64 n) {
    if (P.p - 2 - n < n)
        throw validation_error("no n-generic weights for these parameters");
    std::uniform_int_distribution<i64> digit(n, P.p - 2 - n);
    std::uniform_int_distribution<i64> twist(0, P.qm1() - 1);
    SerreWeight w;
    for (i64 i = 0; i < P.f; ++i)
        w.digits.push_back(digit(rng));
    w.twist = twist(rng);
    return w;
}

MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, const Params& P) {
    std::uniform_int_distribution<i64> ngens(0, 4);
    std::uniform_int_distribution<i64> expo(1, 3);
    std::uniform_int_distribution<int> coin(0, 2); // skip / y / z per index
    std::vector<Monomial> gens;
    i64 n = ngens(rng);
    for (i64 g = 0; g < n; ++g) {
        std::vector<i64> e(static_cast<size_t>(2 * P.f), 0);
        bool nonempty = false;
        for (i64 i = 0; i < P.f; ++i) {
            int pick = coin(rng);
            if (pick == 1) {
                e[static_cast<size_t>(i)] = expo(rng);
                nonempty = true;
            } else if (pick == 2) {
                e[static_cast<size_t>(P.f + i)] = expo(rng);
                nonempty = true;
            }
        }
        if (!nonempty)
            continue; // never emit the unit monomial
        gens.push_back(Monomial::make(P.f, std::move(e)));
    }
    return MonomialIdeal::make(P.f, std::move(gens));
}

} // namespace gl2::oracle
