#include "posrep/arith.hpp"

#include <set>
#include <utility>

namespace posrep {

namespace {

Integer exact_ratio(const NumberSystem& sys, std::size_t position) {
    Integer below = sys.weight(position);
    Integer above = sys.weight(position + 1);
    if (above % below != 0) {
        throw Error(ErrorKind::NotRegular,
                    "weight ratio at position " + std::to_string(position) + " is not an integer");
    }
    return above / below;
}

void check_position(const NumberSystem& sys, std::size_t position) {
    Integer ratio = exact_ratio(sys, position);
    if (ratio < 2) {
        throw Error(ErrorKind::NotRegular,
                    "weight ratio at position " + std::to_string(position) + " is below 2");
    }
    if (sys.range_at(position).cardinality() != ratio) {
        throw Error(ErrorKind::NotRegular,
                    "digit range at position " + std::to_string(position) +
                        " does not cover the weight ratio exactly");
    }
}

std::size_t last_override_position(const NumberSystem& sys) {
    if (sys.overrides().empty()) {
        return 0;
    }
    return sys.overrides().rbegin()->first;
}

// True when every digit range sits entirely on one side of zero, which
// bounds the representable set of an unbounded system from below (or
// above) by the single-digit range.
bool all_ranges_at_least(const NumberSystem& sys, int sign) {
    auto side_ok = [&](const DigitRange& r) {
        return sign > 0 ? r.lo >= 0 : r.hi <= 0;
    };
    if (!side_ok(sys.default_range())) {
        return false;
    }
    for (const auto& [pos, range] : sys.overrides()) {
        if (!side_ok(range)) {
            return false;
        }
    }
    return true;
}

}  // namespace

RegularSystemView::RegularSystemView(const NumberSystem& sys) : sys_(sys) {
    if (sys_.weight(0) != 1) {
        throw Error(ErrorKind::NotRegular, "the least significant weight must be 1");
    }
    if (sys_.max_positions()) {
        // Every position except the topmost must match its ratio.
        for (std::size_t i = 0; i + 1 < *sys_.max_positions(); ++i) {
            check_position(sys_, i);
        }
        return;
    }
    // Unbounded systems need an eventually-constant ratio so the default
    // range can match it beyond the last override.
    Integer tail_ratio;
    switch (sys_.weights().kind()) {
        case WeightScheme::Kind::Power:
            tail_ratio = sys_.weights().base();
            break;
        case WeightScheme::Kind::LongCount:
            tail_ratio = 20;
            break;
        default:
            throw Error(ErrorKind::NotRegular,
                        "weight scheme has no constant ratio; bound the positions");
    }
    std::size_t horizon = std::max<std::size_t>(last_override_position(sys_) + 1, 2);
    for (std::size_t i = 0; i <= horizon; ++i) {
        check_position(sys_, i);
    }
    if (sys_.default_range().cardinality() != tail_ratio) {
        throw Error(ErrorKind::NotRegular,
                    "default digit range does not cover the tail weight ratio");
    }
}

bool RegularSystemView::is_regular(const NumberSystem& sys) {
    try {
        RegularSystemView view(sys);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Integer RegularSystemView::ratio(std::size_t position) const {
    return exact_ratio(sys_, position);
}

namespace {

[[noreturn]] void throw_unrepresentable(const Integer& v, const NumberSystem& sys) {
    std::string msg = "value " + v.str() + " is not representable";
    if (sys.max_positions()) {
        // span over every numeral length, not just the full width
        IntegerInterval span = representable_interval(sys, 1);
        for (std::size_t len = 2; len <= *sys.max_positions(); ++len) {
            IntegerInterval at = representable_interval(sys, len);
            if (at.min < span.min) span.min = at.min;
            if (at.max > span.max) span.max = at.max;
        }
        msg += "; representable values lie within [" + span.min.str() + ", " + span.max.str() + "]";
    } else if (all_ranges_at_least(sys, +1)) {
        msg += "; representable values are >= " + sys.range_at(0).lo.str();
    } else if (all_ranges_at_least(sys, -1)) {
        msg += "; representable values are <= " + sys.range_at(0).hi.str();
    }
    throw Error(ErrorKind::Unrepresentable, msg);
}

}  // namespace

Numeral canonicalize(const Integer& v, const RegularSystemView& view) {
    const NumberSystem& sys = view.system();

    if (all_ranges_at_least(sys, +1) && v < sys.range_at(0).lo && v != 0) {
        throw_unrepresentable(v, sys);
    }
    if (all_ranges_at_least(sys, -1) && v > sys.range_at(0).hi && v != 0) {
        throw_unrepresentable(v, sys);
    }
    if (v == 0) {
        if (!sys.range_at(0).contains(0)) {
            throw_unrepresentable(v, sys);
        }
        return Numeral({0});
    }

    std::vector<Digit> lsd;
    Integer rem = v;
    std::size_t pos = 0;
    // Beyond the last override every range is identical, so a repeated
    // remainder there can never make progress.
    std::size_t uniform_from = sys.overrides().empty() ? 0 : last_override_position(sys) + 1;
    std::set<Integer> seen;

    while (rem != 0) {
        if (sys.max_positions() && pos >= *sys.max_positions()) {
            throw_unrepresentable(v, sys);
        }
        DigitRange range = sys.range_at(pos);
        if (sys.max_positions() && pos + 1 == *sys.max_positions()) {
            // Topmost digit of a bounded system absorbs the remainder.
            if (!range.contains(rem)) {
                throw_unrepresentable(v, sys);
            }
            lsd.push_back(rem);
            rem = 0;
            break;
        }
        if (!sys.max_positions() && pos >= uniform_from && !seen.insert(rem).second) {
            throw_unrepresentable(v, sys);
        }
        Integer ratio = view.ratio(pos);
        Integer digit = range.lo + floor_mod(rem - range.lo, ratio);
        rem = (rem - digit) / ratio;
        lsd.push_back(std::move(digit));
        ++pos;
    }
    return Numeral::from_lsd(std::move(lsd));
}

Numeral canonicalize(const Integer& v, const NumberSystem& sys) {
    return canonicalize(v, RegularSystemView(sys));
}

Numeral add(const Numeral& a, const Numeral& b, const NumberSystem& sys) {
    RegularSystemView view(sys);
    for (const Numeral* operand : {&a, &b}) {
        ValidationResult check = validate(*operand, sys);
        if (!check.ok()) {
            throw Error(ErrorKind::Domain, "addition operands must validate against the system");
        }
    }

    std::vector<Digit> lsd;
    Integer carry = 0;
    std::size_t pos = 0;
    std::size_t operand_len = std::max(a.length(), b.length());
    while (pos < operand_len || carry != 0) {
        if (sys.max_positions() && pos >= *sys.max_positions()) {
            throw Error(ErrorKind::Length, "sum overflows the system's position bound");
        }
        Integer s = carry;
        if (pos < a.length()) s += a.digit(pos);
        if (pos < b.length()) s += b.digit(pos);

        DigitRange range = sys.range_at(pos);
        if (sys.max_positions() && pos + 1 == *sys.max_positions()) {
            if (!range.contains(s)) {
                throw Error(ErrorKind::Length, "sum overflows the system's position bound");
            }
            lsd.push_back(std::move(s));
            carry = 0;
            ++pos;
            continue;
        }
        Integer ratio = view.ratio(pos);
        Integer digit = range.lo + floor_mod(s - range.lo, ratio);
        carry = (s - digit) / ratio;
        lsd.push_back(std::move(digit));
        ++pos;
    }
    while (lsd.size() > 1 && lsd.back() == 0) {
        lsd.pop_back();
    }
    return Numeral::from_lsd(std::move(lsd));
}

Ordering compare(const Numeral& a, const Numeral& b, const NumberSystem& sys) {
    Integer va = evaluate(a, sys);
    Integer vb = evaluate(b, sys);
    if (va < vb) return Ordering::Less;
    if (va > vb) return Ordering::Greater;
    return Ordering::Equal;
}

}  // namespace posrep
