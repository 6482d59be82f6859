// Checked 128-bit integer helpers. All arithmetic in the engine is exact;
// overflow raises selink::overflow_error instead of wrapping.
#pragma once

#include <cstdint>
#include <string>

#include "selink/errors.hpp"

namespace selink {

using i64 = std::int64_t;
using i128 = __int128;

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in subtraction");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
    return r;
}

inline i128 iabs(i128 a) { return a < 0 ? -a : a; }

inline i128 igcd(i128 a, i128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i128 ilcm(i128 a, i128 b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(iabs(a) / igcd(a, b), iabs(b));
}

inline i64 to_i64(i128 v, const char* what = "value") {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw overflow_error(std::string(what) + " does not fit in 64 bits");
    return static_cast<i64>(v);
}

std::string to_string_i128(i128 v);

}  // namespace selink
