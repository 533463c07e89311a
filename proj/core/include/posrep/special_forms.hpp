#pragma once

#include "posrep/numeral.hpp"

namespace posrep {

/// Balanced signed-digit base: odd b >= 3, digits -(b-1)/2 .. (b-1)/2.
struct BalancedSpec {
    Integer base;

    explicit BalancedSpec(Integer b);
    Integer digit_bound() const { return (base - 1) / 2; }
};

/// Zeroless representation with digits 1..b. Unique for every v >= 1;
/// zero has no form.
Numeral to_bijective(const Integer& v, const Integer& base);
Integer from_bijective(const Numeral& n, const Integer& base);

/// Unique balanced form of any integer; sign is carried by the digits.
Numeral to_balanced(const Integer& v, const BalancedSpec& spec);

/// Greedy sum of distinct non-consecutive Fibonacci numbers (weights
/// 1, 2, 3, 5, 8, ...). Defined for v >= 1.
Numeral zeckendorf(const Integer& v);

/// Rewrites ...011... -> ...100... until no two adjacent ones remain.
/// Value-preserving and idempotent; input digits must be 0 or 1.
Numeral zeckendorf_normalize(const Numeral& n);

}  // namespace posrep
