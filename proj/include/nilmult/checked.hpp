#pragma once

#include <stdexcept>
#include <string>

#include "nilmult/errors.hpp"

namespace nilmult::checked {

// All counting in this library goes through these helpers: an operation that
// cannot be represented in a signed 64-bit value throws OverflowError instead
// of wrapping.

inline long long add(long long a, long long b) {
    long long r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline long long sub(long long a, long long b) {
    long long r = 0;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("overflow in " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline long long mul(long long a, long long b) {
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

/// base^exponent by checked square-and-multiply; exponent must be >= 0.
inline long long pow(long long base, long long exponent) {
    if (exponent < 0) throw std::invalid_argument("checked::pow: negative exponent");
    long long result = 1;
    long long square = base;
    while (exponent > 0) {
        if (exponent & 1) result = mul(result, square);
        exponent >>= 1;
        if (exponent > 0) square = mul(square, square);
    }
    return result;
}

} // namespace nilmult::checked
