// Overflow-checked fixed-width integer helpers.
#pragma once

#include <cstdint>
#include <limits>

#include "gca/errors.hpp"

namespace gca::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("64-bit integer overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("64-bit integer overflow in multiplication");
    return r;
}

inline std::int32_t narrow_exponent(std::int64_t v) {
    if (v < std::numeric_limits<std::int32_t>::min() || v > std::numeric_limits<std::int32_t>::max())
        throw Overflow("exponent exceeds 32-bit range");
    return static_cast<std::int32_t>(v);
}

// Floor division for a positive divisor.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

}  // namespace gca::detail
