#pragma once

#include <vector>

#include "gl2/numeric.hpp"

namespace gl2 {

// Arithmetic context: an odd prime p, the inertial degree f, and q = p^f,
// computed exactly at construction. Immutable; safe to share across threads.
struct Params {
    i64 p = 0;
    i64 f = 0;
    i64 q = 0;

    i64 qm1() const { return q - 1; }

    bool operator==(const Params&) const = default;
};

// Validates p (odd prime), f >= 1, and that q = p^f fits in 62 bits so all
// modular arithmetic stays exact.
Params make_params(i64 p, i64 f);

} // namespace gl2
