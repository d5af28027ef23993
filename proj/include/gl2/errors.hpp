#pragma once

#include <stdexcept>
#include <string>

namespace gl2 {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejected input or violated precondition. Messages name the offending field.
struct validation_error : error {
    using error::error;
};

// An arithmetic operation that refuses to proceed (odd halving, negative
// cycle coefficient). Never rounds or clamps silently.
struct arithmetic_error : error {
    using error::error;
};

// A mathematical identity that must hold was falsified. This is a
// release-blocking event, reported with a distinct CLI exit code.
struct invariant_error : error {
    using error::error;
};

} // namespace gl2
