#pragma once

#include "parqsym/rational.hpp"

namespace parqsym::detail {

inline Rational pow_rational(const Rational& base, int exp) {
    Rational out = 1;
    Rational b = base;
    int e = exp;
    if (e < 0) {
        if (base == 0) throw InvariantError("zero to a negative power");
        b = 1 / base;
        e = -e;
    }
    for (; e > 0; --e) out *= b;
    return out;
}

inline Rational sign_pow(int exp) {
    return (exp % 2 == 0) ? Rational(1) : Rational(-1);
}

}  // namespace parqsym::detail
