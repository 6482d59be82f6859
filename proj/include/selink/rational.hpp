// Exact rationals over checked 128-bit integers. Always normalized:
// denominator > 0, gcd(|num|, den) = 1.
#pragma once

#include <string>

#include "selink/ints.hpp"

namespace selink {

struct Rat {
    i128 num = 0;
    i128 den = 1;

    Rat() = default;
    Rat(i128 n) : num(n), den(1) {}
    Rat(i128 n, i128 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw usage_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 g = igcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    Rat operator+(const Rat& o) const {
        return Rat(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                   checked_mul(den, o.den));
    }
    Rat operator-(const Rat& o) const {
        return Rat(checked_sub(checked_mul(num, o.den), checked_mul(o.num, den)),
                   checked_mul(den, o.den));
    }
    Rat operator*(const Rat& o) const {
        return Rat(checked_mul(num, o.num), checked_mul(den, o.den));
    }
    Rat operator/(const Rat& o) const {
        if (o.num == 0) throw usage_error("rational division by zero");
        return Rat(checked_mul(num, o.den), checked_mul(den, o.num));
    }

    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const {
        return checked_mul(num, o.den) < checked_mul(o.num, den);
    }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator<=(const Rat& o) const { return !(o < *this); }
    bool operator>=(const Rat& o) const { return !(*this < o); }

    bool is_integer() const { return den == 1; }

    i64 to_i64(const char* what = "rational") const {
        if (den != 1) throw inconsistency_error(std::string(what) + " is not an integer: " + str());
        return selink::to_i64(num, what);
    }

    std::string str() const {
        if (den == 1) return to_string_i128(num);
        return to_string_i128(num) + "/" + to_string_i128(den);
    }
};

inline Rat rat_inv(i128 n) { return Rat(1, n); }

}  // namespace selink
