#pragma once

#include <stdexcept>
#include <string>

namespace gpha {

// Thrown when a verdict that is forced by construction fails anyway.
// Signals an implementation bug, never bad input data.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Explicit refusal: the request is well-formed but exceeds a configured
// bound. The message states the bound that was hit.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

struct overflow_error : std::runtime_error {
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("integer overflow in exact arithmetic (add)");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r))
        throw overflow_error("integer overflow in exact arithmetic (sub)");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("integer overflow in exact arithmetic (mul)");
    return r;
}

} // namespace detail
} // namespace gpha
