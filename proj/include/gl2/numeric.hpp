#pragma once

#include <cstdint>
#include <string>

#include "gl2/errors.hpp"

namespace gl2 {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// Canonical representative in [0, m).
inline i64 mod_reduce(i128 a, i64 m) {
    i128 r = a % m;
    if (r < 0)
        r += m;
    return static_cast<i64>(r);
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
    return mod_reduce(static_cast<i128>(a) * b, m);
}

// base^exp with exact overflow detection.
i64 checked_pow(i64 base, i64 exp);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(u64 n);

// C(n, k) as an exact 64-bit integer; throws on overflow.
i64 binomial(i64 n, i64 k);

std::string i128_to_string(i128 v);

} // namespace gl2
