#include "gl2/numeric.hpp"

namespace gl2 {

i64 checked_pow(i64 base, i64 exp) {
    i128 acc = 1;
    for (i64 i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > (i128(1) << 62))
            throw validation_error("power overflows: " + std::to_string(base) + "^" +
                                   std::to_string(exp) + " exceeds 2^62");
    }
    return static_cast<i64>(acc);
}

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2)
        return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is exact for all 64-bit integers.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

i64 binomial(i64 n, i64 k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    i128 acc = 1;
    for (i64 i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i; // exact: prefix products of binomials
        if (acc > (i128(1) << 62))
            throw validation_error("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                   ") exceeds 2^62");
    }
    return static_cast<i64>(acc);
}

std::string i128_to_string(i128 v) {
    if (v == 0)
        return "0";
    bool neg = v < 0;
    unsigned __int128 a = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    std::string s;
    while (a) {
        s.push_back(static_cast<char>('0' + static_cast<int>(a % 10)));
        a /= 10;
    }
    if (neg)
        s.push_back('-');
    return {s.rbegin(), s.rend()};
}

} // namespace gl2
