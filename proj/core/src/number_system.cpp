#include "posrep/number_system.hpp"

#include <utility>

namespace posrep {

WeightScheme WeightScheme::power(Integer base) {
    if (base < 2) {
        throw Error(ErrorKind::Semantic, "power base must be at least 2");
    }
    WeightScheme s;
    s.kind_ = Kind::Power;
    s.base_ = std::move(base);
    return s;
}

WeightScheme WeightScheme::explicit_weights(std::vector<Integer> weights) {
    if (weights.empty()) {
        throw Error(ErrorKind::Semantic, "weight list must not be empty");
    }
    Integer prev = 0;
    for (const Integer& w : weights) {
        if (w <= prev) {
            throw Error(ErrorKind::Semantic, "weights must be positive and strictly increasing");
        }
        prev = w;
    }
    WeightScheme s;
    s.kind_ = Kind::Explicit;
    s.weights_ = std::move(weights);
    return s;
}

WeightScheme WeightScheme::long_count() {
    WeightScheme s;
    s.kind_ = Kind::LongCount;
    return s;
}

WeightScheme WeightScheme::fibonacci() {
    WeightScheme s;
    s.kind_ = Kind::Fibonacci;
    return s;
}

WeightScheme WeightScheme::factorial() {
    WeightScheme s;
    s.kind_ = Kind::Factorial;
    return s;
}

Integer WeightScheme::weight(std::size_t position) const {
    switch (kind_) {
        case Kind::Power:
            return boost::multiprecision::pow(base_, static_cast<unsigned>(position));
        case Kind::Explicit:
            if (position >= weights_.size()) {
                throw Error(ErrorKind::Length, "position beyond the explicit weight list");
            }
            return weights_[position];
        case Kind::LongCount: {
            if (position == 0) return 1;
            if (position == 1) return 20;
            return 18 * boost::multiprecision::pow(Integer(20), static_cast<unsigned>(position - 1));
        }
        case Kind::Fibonacci: {
            // 1, 2, 3, 5, 8, ...: distinct Fibonacci numbers.
            Integer a = 1, b = 2;
            for (std::size_t i = 0; i < position; ++i) {
                Integer next = a + b;
                a = b;
                b = next;
            }
            return a;
        }
        case Kind::Factorial: {
            Integer w = 1;
            for (std::size_t i = 2; i <= position + 1; ++i) {
                w *= static_cast<unsigned long long>(i);
            }
            return w;
        }
    }
    throw Error(ErrorKind::Domain, "unknown weight scheme kind");
}

std::vector<Integer> WeightScheme::weight_prefix(std::size_t length) const {
    std::vector<Integer> out;
    out.reserve(length);
    switch (kind_) {
        case Kind::Power: {
            Integer w = 1;
            for (std::size_t i = 0; i < length; ++i) {
                out.push_back(w);
                w *= base_;
            }
            break;
        }
        case Kind::Fibonacci: {
            Integer a = 1, b = 2;
            for (std::size_t i = 0; i < length; ++i) {
                out.push_back(a);
                Integer next = a + b;
                a = b;
                b = next;
            }
            break;
        }
        case Kind::Factorial: {
            Integer w = 1;
            for (std::size_t i = 0; i < length; ++i) {
                w *= static_cast<unsigned long long>(i + 1);
                out.push_back(w);
            }
            break;
        }
        default:
            for (std::size_t i = 0; i < length; ++i) {
                out.push_back(weight(i));
            }
            break;
    }
    return out;
}

std::optional<std::size_t> WeightScheme::position_limit() const {
    if (kind_ == Kind::Explicit) {
        return weights_.size();
    }
    return std::nullopt;
}

NumberSystem::NumberSystem(WeightScheme weights, DigitRange default_range,
                           std::map<std::size_t, DigitRange> overrides,
                           std::optional<std::size_t> max_positions)
    : weights_(std::move(weights)),
      default_range_(std::move(default_range)),
      overrides_(std::move(overrides)),
      max_positions_(max_positions) {
    if (default_range_.lo > default_range_.hi) {
        throw Error(ErrorKind::Semantic, "digit range is empty");
    }
    for (const auto& [pos, range] : overrides_) {
        if (range.lo > range.hi) {
            throw Error(ErrorKind::Semantic, "digit range override is empty");
        }
    }
    if (auto limit = weights_.position_limit()) {
        // An explicit weight list fixes the number of positions.
        max_positions_ = *limit;
    }
    if (max_positions_) {
        if (*max_positions_ == 0) {
            throw Error(ErrorKind::Semantic, "position bound must be positive");
        }
        for (const auto& [pos, range] : overrides_) {
            if (pos >= *max_positions_) {
                throw Error(ErrorKind::Semantic, "override position beyond the position bound");
            }
        }
    }
}

DigitRange NumberSystem::range_at(std::size_t position) const {
    auto it = overrides_.find(position);
    return it != overrides_.end() ? it->second : default_range_;
}

Integer evaluate(const Numeral& n, const NumberSystem& sys) {
    if (sys.max_positions() && n.length() > *sys.max_positions()) {
        throw Error(ErrorKind::Length, "numeral has more positions than the system allows");
    }
    auto weights = sys.weights().weight_prefix(n.length());
    Integer total = 0;
    for (std::size_t i = 0; i < n.length(); ++i) {
        total += n.digit(i) * weights[i];
    }
    return total;
}

ValidationResult validate(const Numeral& n, const NumberSystem& sys) {
    ValidationResult result;
    std::size_t checked = n.length();
    if (sys.max_positions() && n.length() > *sys.max_positions()) {
        result.length_exceeded = true;
        checked = *sys.max_positions();
    }
    for (std::size_t i = 0; i < checked; ++i) {
        DigitRange range = sys.range_at(i);
        if (!range.contains(n.digit(i))) {
            result.violations.push_back({i, n.digit(i), range});
        }
    }
    return result;
}

IntegerInterval representable_interval(const NumberSystem& sys, std::size_t length) {
    if (length == 0) {
        throw Error(ErrorKind::Domain, "interval length must be positive");
    }
    if (sys.max_positions() && length > *sys.max_positions()) {
        throw Error(ErrorKind::Length, "length exceeds the system's position bound");
    }
    auto weights = sys.weights().weight_prefix(length);
    Integer lo = 0, hi = 0;
    for (std::size_t i = 0; i < length; ++i) {
        DigitRange range = sys.range_at(i);
        lo += range.lo * weights[i];
        hi += range.hi * weights[i];
    }
    return {lo, hi};
}

ShiftResult shift_digits(const NumberSystem& sys, const Integer& s, std::size_t length) {
    if (!sys.uniform()) {
        throw Error(ErrorKind::UnsupportedShape,
                    "digit shifting is defined for uniform-range systems only");
    }
    if (length == 0) {
        throw Error(ErrorKind::Domain, "shift length must be positive");
    }
    if (sys.max_positions() && length > *sys.max_positions()) {
        throw Error(ErrorKind::Length, "length exceeds the system's position bound");
    }
    DigitRange shifted{sys.default_range().lo + s, sys.default_range().hi + s};
    NumberSystem out(sys.weights(), shifted, {}, sys.max_positions());
    Integer offset = 0;
    for (const Integer& w : sys.weights().weight_prefix(length)) {
        offset += w;
    }
    offset *= s;
    return {std::move(out), std::move(offset)};
}

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Syntax: return "syntax";
        case ErrorKind::Semantic: return "semantic";
        case ErrorKind::Length: return "length";
        case ErrorKind::Unrepresentable: return "unrepresentable";
        case ErrorKind::NotRegular: return "not-regular";
        case ErrorKind::UnsupportedShape: return "unsupported-shape";
        case ErrorKind::Scale: return "scale";
        case ErrorKind::Domain: return "domain";
    }
    return "unknown";
}

}  // namespace posrep
