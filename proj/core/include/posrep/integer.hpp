#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace posrep {

/// Exact integer type used for digit values, weights, and evaluated numbers.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational, used for redundancy fractions.
using Rational = boost::multiprecision::cpp_rational;

// cpp_int division truncates toward zero; radix arithmetic over shifted and
// signed digit ranges needs the floored variants.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

inline Integer floor_mod(const Integer& a, const Integer& b) {
    Integer r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) {
        r += b;
    }
    return r;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
    return -floor_div(-a, b);
}

}  // namespace posrep
