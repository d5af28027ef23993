#include "gl2/tuples.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace gl2 {

AffineTuple identity_tuple(i64 f) {
    AffineTuple t;
    t.forms.assign(static_cast<size_t>(f), AffineForm{1, 0});
    return t;
}

void validate_tuple(const AffineTuple& t, const Params& P) {
    if (static_cast<i64>(t.forms.size()) != P.f)
        throw validation_error("tuple: expected " + std::to_string(P.f) + " forms, got " +
                               std::to_string(t.forms.size()));
    for (const auto& a : t.forms)
        if (a.sign != 1 && a.sign != -1)
            throw validation_error("tuple: sign must be +1 or -1");
}

std::vector<i64> eval_tuple(const AffineTuple& t, std::span<const i64> r) {
    if (r.size() != t.forms.size())
        throw validation_error("r: expected " + std::to_string(t.forms.size()) +
                               " entries, got " + std::to_string(r.size()));
    std::vector<i64> out(r.size());
    for (size_t i = 0; i < r.size(); ++i)
        out[i] = t.forms[i].eval(r[i]);
    return out;
}

i64 e_twist(const AffineTuple& t, std::span<const i64> r, const Params& P) {
    validate_tuple(t, P);
    if (r.size() != t.forms.size())
        throw validation_error("r: expected " + std::to_string(t.forms.size()) +
                               " entries, got " + std::to_string(r.size()));
    i128 num = 0;
    i128 pw = 1;
    for (size_t i = 0; i < r.size(); ++i) {
        num += pw * (r[i] - t.forms[i].eval(r[i]));
        pw *= P.p;
    }
    if (t.forms.back().sign < 0)
        num += P.qm1();
    if (num & 1)
        throw arithmetic_error("e_twist: odd numerator " + i128_to_string(num) +
                               ", refusing to halve");
    return mod_reduce(num / 2, P.qm1());
}

SerreWeight weight_of_tuple(const AffineTuple& t, std::span<const i64> r, const Params& P) {
    SerreWeight w;
    w.digits = eval_tuple(t, r);
    for (size_t i = 0; i < w.digits.size(); ++i)
        if (w.digits[i] < 0 || w.digits[i] > P.p - 1)
            throw validation_error("tuple digit at index " + std::to_string(i) + ": " +
                                   std::to_string(w.digits[i]) + " outside [0, p-1]");
    w.twist = e_twist(t, r, P);
    return w;
}

namespace {

// Shared transfer construction for both tuple families. Classes are bits
// (0 = plus family, 1 = minus family); rep_for(prev_class, cls) yields the
// form at a position given its class and its predecessor's class.
template <typename RepFn>
std::vector<AffineTuple> enumerate_by_classes(const Params& P, RepFn rep_for) {
    const i64 f = P.f;
    std::vector<AffineTuple> out;
    out.reserve(static_cast<size_t>(1) << f);
    for (u64 mask = 0; mask < (u64(1) << f); ++mask) {
        AffineTuple t;
        t.forms.resize(static_cast<size_t>(f));
        for (i64 i = 0; i < f; ++i) {
            int cls = (mask >> i) & 1;
            int prev = (mask >> ((i + f - 1) % f)) & 1;
            t.forms[static_cast<size_t>(i)] = rep_for(prev, cls);
        }
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

std::vector<AffineTuple> enumerate_D(const Params& P) {
    std::vector<AffineTuple> out;
    if (P.f == 1) {
        out.push_back(AffineTuple{{AffineForm{1, 0}}});
        out.push_back(AffineTuple{{AffineForm{-1, P.p - 3}}});
    } else {
        out = enumerate_by_classes(P, [&](int prev, int cls) {
            if (cls == 0)
                return prev == 0 ? AffineForm{1, 0} : AffineForm{1, 1};
            return prev == 0 ? AffineForm{-1, P.p - 2} : AffineForm{-1, P.p - 3};
        });
    }
    std::sort(out.begin(), out.end(),
              [&](const AffineTuple& a, const AffineTuple& b) { return display_less(a, b, P); });
    return out;
}

std::vector<AffineTuple> enumerate_P_ind(const Params& P) {
    std::vector<AffineTuple> out;
    if (P.f == 1) {
        out.push_back(AffineTuple{{AffineForm{1, 0}}});
        out.push_back(AffineTuple{{AffineForm{-1, P.p - 1}}});
    } else {
        out = enumerate_by_classes(P, [&](int prev, int cls) {
            if (cls == 0)
                return prev == 0 ? AffineForm{1, 0} : AffineForm{1, -1};
            return prev == 0 ? AffineForm{-1, P.p - 2} : AffineForm{-1, P.p - 1};
        });
    }
    std::sort(out.begin(), out.end(),
              [&](const AffineTuple& a, const AffineTuple& b) { return display_less(a, b, P); });
    return out;
}

std::vector<int> j_set(const AffineTuple& t, const Params& P) {
    validate_tuple(t, P);
    std::vector<int> out;
    for (size_t j = 0; j < t.forms.size(); ++j) {
        const auto& a = t.forms[j];
        bool in = (a.sign == 1 && (a.offset == 1 || a.offset == 2)) ||
                  (a.sign == -1 && a.offset == P.p - 3);
        if (in)
            out.push_back(static_cast<int>(j));
    }
    return out;
}

bool check_intersection(const Params& P) {
    auto d = enumerate_D(P);
    auto p = enumerate_P_ind(P);
    std::set<AffineTuple> ds(d.begin(), d.end());
    std::vector<AffineTuple> common;
    for (const auto& t : p)
        if (ds.count(t))
            common.push_back(t);
    return common.size() == 1 && common.front() == identity_tuple(P.f);
}

std::string to_string(const AffineForm& a, const Params& P) {
    if (a.sign == 1) {
        if (a.offset >= 0)
            return "x+" + std::to_string(a.offset);
        return "x-" + std::to_string(-a.offset);
    }
    i64 k = P.p - a.offset;
    if (k >= 0)
        return "P-" + std::to_string(k) + "-x";
    return "P+" + std::to_string(-k) + "-x";
}

std::string to_string(const AffineTuple& t, const Params& P) {
    std::string s;
    for (size_t i = 0; i < t.forms.size(); ++i) {
        if (i)
            s += ",";
        s += to_string(t.forms[i], P);
    }
    return s;
}

AffineForm parse_form(const std::string& token, const Params& P) {
    try {
        if (token == "x")
            return AffineForm{1, 0};
        if (token.rfind("x+", 0) == 0)
            return AffineForm{1, std::stoll(token.substr(2))};
        if (token.rfind("x-", 0) == 0)
            return AffineForm{1, -std::stoll(token.substr(2))};
        if (token.rfind("P-", 0) == 0 && token.size() > 4 &&
            token.compare(token.size() - 2, 2, "-x") == 0) {
            i64 k = std::stoll(token.substr(2, token.size() - 4));
            return AffineForm{-1, P.p - k};
        }
    } catch (const std::exception&) {
        // fall through to the shared error below
    }
    throw validation_error("tuple token '" + token + "': expected x+K, x-K or P-K-x");
}

AffineTuple parse_tuple(const std::string& csv, const Params& P) {
    AffineTuple t;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        std::string token =
            comma == std::string::npos ? csv.substr(start) : csv.substr(start, comma - start);
        t.forms.push_back(parse_form(token, P));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    validate_tuple(t, P);
    return t;
}

bool display_less(const AffineTuple& a, const AffineTuple& b, const Params& P) {
    // Plus-sign forms first; within a sign, the unshifted representative
    // (x, respectively p-2-x) precedes the shifted ones.
    auto key = [&](const AffineForm& x) {
        i64 shift = x.sign == 1 ? std::abs(x.offset) : std::abs(x.offset - (P.p - 2));
        return std::tuple<i64, i64, i64>{x.sign == 1 ? 0 : 1, shift, x.offset};
    };
    for (size_t i = 0; i < std::min(a.forms.size(), b.forms.size()); ++i) {
        auto ka = key(a.forms[i]);
        auto kb = key(b.forms[i]);
        if (ka != kb)
            return ka < kb;
    }
    return a.forms.size() < b.forms.size();
}

} // namespace gl2
