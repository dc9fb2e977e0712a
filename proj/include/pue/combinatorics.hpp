#ifndef PUE_COMBINATORICS_HPP
#define PUE_COMBINATORICS_HPP

#include "pue/errors.hpp"

#include <cstddef>
#include <cstdint>

namespace pue {

using Int128 = __int128;

inline Int128 checked_mul(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw ParameterError("integer overflow in exact arithmetic");
    return r;
}

inline Int128 checked_add(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw ParameterError("integer overflow in exact arithmetic");
    return r;
}

inline Int128 binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = checked_mul(r, static_cast<Int128>(n - k + i)) / static_cast<Int128>(i);
    return r;
}

inline Int128 int_pow(Int128 base, std::size_t e) {
    Int128 r = 1;
    for (std::size_t i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

inline double binomial_real(std::size_t n, std::size_t k) { return static_cast<double>(binomial(n, k)); }

}  // namespace pue

#endif  // PUE_COMBINATORICS_HPP
