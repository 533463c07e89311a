#pragma once

#include <cstddef>
#include <vector>

#include "posrep/number_system.hpp"

namespace posrep {

enum class Ordering { Less, Equal, Greater };

/// View of a system in which canonical div/mod arithmetic is exact: the
/// first weight is 1, every weight ratio w(i+1)/w(i) is an integer >= 2,
/// and every digit range (except the topmost of a bounded system) has
/// cardinality equal to the ratio above it.
class RegularSystemView {
public:
    /// Throws a NotRegular error naming the first violated condition.
    explicit RegularSystemView(const NumberSystem& sys);

    static bool is_regular(const NumberSystem& sys);

    const NumberSystem& system() const { return sys_; }
    Integer ratio(std::size_t position) const;

private:
    NumberSystem sys_;
};

/// Canonical numeral of v: validates against the system, evaluates back to
/// v, and carries no leading zero. Throws Unrepresentable when v lies
/// outside the representable set.
Numeral canonicalize(const Integer& v, const RegularSystemView& view);
Numeral canonicalize(const Integer& v, const NumberSystem& sys);

/// Carry-normalizing addition; result is the canonical numeral of the sum.
Numeral add(const Numeral& a, const Numeral& b, const NumberSystem& sys);

/// Orders numerals by value. Distinct digit strings may compare Equal in a
/// redundant system.
Ordering compare(const Numeral& a, const Numeral& b, const NumberSystem& sys);

}  // namespace posrep
