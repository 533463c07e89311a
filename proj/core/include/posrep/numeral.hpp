#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "posrep/integer.hpp"

namespace posrep {

/// A digit is an exact integer of any sign and magnitude. Range checks
/// belong to the number system, not the digit itself.
using Digit = Integer;

/// Inclusive digit range [lo, hi] attached to a position.
struct DigitRange {
    Integer lo;
    Integer hi;

    Integer cardinality() const { return hi - lo + 1; }
    bool contains(const Integer& d) const { return lo <= d && d <= hi; }
    bool operator==(const DigitRange&) const = default;
};

/// Inclusive interval of integers.
struct IntegerInterval {
    Integer min;
    Integer max;

    Integer cardinality() const { return max - min + 1; }
    bool contains(const Integer& v) const { return min <= v && v <= max; }
    bool operator==(const IntegerInterval&) const = default;
};

/// A finite digit string, most significant digit first. Position 0 is the
/// least significant digit (the back of the sequence).
class Numeral {
public:
    Numeral() = default;
    explicit Numeral(std::vector<Digit> most_significant_first);
    Numeral(std::initializer_list<long long> most_significant_first);

    /// Builds from least-significant-first digits (the order arithmetic
    /// naturally produces).
    static Numeral from_lsd(std::vector<Digit> least_significant_first);

    std::size_t length() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }

    /// Digit at position i, where position 0 is least significant.
    const Digit& digit(std::size_t position) const { return digits_[digits_.size() - 1 - position]; }

    const std::vector<Digit>& msd_first() const { return digits_; }

    /// Drops leading digits equal to zero, keeping at least one digit.
    Numeral without_leading_zeros() const;

    bool operator==(const Numeral&) const = default;

    /// Order used for deterministic representation listings: by length,
    /// then lexicographically on the most-significant-first digit values.
    static bool length_lex_less(const Numeral& a, const Numeral& b);

private:
    std::vector<Digit> digits_;
};

}  // namespace posrep
