#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posrep/error.hpp"
#include "posrep/integer.hpp"
#include "posrep/numeral.hpp"

namespace posrep {

/// How positional weights are generated. Weight index 0 is the least
/// significant position.
class WeightScheme {
public:
    enum class Kind {
        Power,      // weight(i) = base^i
        Explicit,   // finite list, least significant first
        LongCount,  // 1, 20, 18*20, 18*20^2, ...
        Fibonacci,  // 1, 2, 3, 5, 8, ...  (distinct terms)
        Factorial,  // 1!, 2!, 3!, ...
    };

    static WeightScheme power(Integer base);
    static WeightScheme explicit_weights(std::vector<Integer> weights);
    static WeightScheme long_count();
    static WeightScheme fibonacci();
    static WeightScheme factorial();

    Kind kind() const { return kind_; }
    const Integer& base() const { return base_; }  // Power only
    const std::vector<Integer>& weights() const { return weights_; }  // Explicit only

    Integer weight(std::size_t position) const;
    /// weights 0..length-1, least significant first.
    std::vector<Integer> weight_prefix(std::size_t length) const;

    /// Number of positions an Explicit scheme provides; empty otherwise.
    std::optional<std::size_t> position_limit() const;

    bool operator==(const WeightScheme&) const = default;

private:
    Kind kind_ = Kind::Power;
    Integer base_ = 0;
    std::vector<Integer> weights_;
};

/// Outcome of validating a numeral against a system. Violations are data,
/// not errors: scribal variants must be inspectable.
struct RangeViolation {
    std::size_t position;
    Digit digit;
    DigitRange allowed;
};

struct ValidationResult {
    std::vector<RangeViolation> violations;
    bool length_exceeded = false;

    bool ok() const { return violations.empty() && !length_exceeded; }
};

/// A positional number representation system: a weight scheme plus a digit
/// range for every position. Immutable after construction.
class NumberSystem {
public:
    NumberSystem(WeightScheme weights, DigitRange default_range,
                 std::map<std::size_t, DigitRange> overrides = {},
                 std::optional<std::size_t> max_positions = std::nullopt);

    const WeightScheme& weights() const { return weights_; }
    const DigitRange& default_range() const { return default_range_; }
    const std::map<std::size_t, DigitRange>& overrides() const { return overrides_; }
    std::optional<std::size_t> max_positions() const { return max_positions_; }

    DigitRange range_at(std::size_t position) const;
    Integer weight(std::size_t position) const { return weights_.weight(position); }

    /// True when every position's range is the default range.
    bool uniform() const { return overrides_.empty(); }

    bool operator==(const NumberSystem&) const = default;

private:
    WeightScheme weights_;
    DigitRange default_range_;
    std::map<std::size_t, DigitRange> overrides_;
    std::optional<std::size_t> max_positions_;
};

/// The pure positional sum over the system's weights. Digits outside their
/// range are accepted deliberately; only the length bound is enforced.
Integer evaluate(const Numeral& n, const NumberSystem& sys);

/// Reports every position whose digit falls outside its range, and whether
/// the numeral exceeds the position bound.
ValidationResult validate(const Numeral& n, const NumberSystem& sys);

/// [sum of lo_i*w_i, sum of hi_i*w_i] over positions 0..length-1.
IntegerInterval representable_interval(const NumberSystem& sys, std::size_t length);

struct ShiftResult {
    NumberSystem system;
    Integer offset;
};

/// Shifts every digit range by s. Defined for uniform-range systems only;
/// the offset is s times the sum of the first `length` weights.
ShiftResult shift_digits(const NumberSystem& sys, const Integer& s, std::size_t length);

}  // namespace posrep
