#pragma once

#include <cassert>
#include <stdexcept>

namespace treecover {

/// ceil(a / b) for b > 0, correct for negative a.
constexpr long long ceil_div(long long a, long long b) {
    assert(b > 0);
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

/// floor(a / b) for b > 0, correct for negative a.
constexpr long long floor_div(long long a, long long b) {
    assert(b > 0);
    return a >= 0 ? a / b : -(((-a) + b - 1) / b);
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}

} // namespace treecover
