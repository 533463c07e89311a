#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "posrep/number_system.hpp"

namespace posrep {

/// Every representation of one value, modulo leading zeros. Members are
/// sorted longest first, then lexicographically most-significant-first,
/// so listings are stable for golden files.
struct RepresentationSet {
    Integer value;
    std::vector<Numeral> members;
    std::size_t max_positions_used = 0;
};

struct RedundancyReport {
    IntegerInterval range;
    /// Values with two or more representations, with all their forms.
    std::vector<RepresentationSet> non_unique;
    /// Values in range with no representation at all.
    std::vector<Integer> gaps;
    /// |non_unique| / |range|.
    Rational fraction_redundant;
};

struct AuditOptions {
    /// Upper bound on candidate digit prunings an audit may spend before
    /// refusing. Audits also refuse ranges wider than ~10^6 values.
    std::uint64_t budget = 100'000'000;
};

/// All digit strings of at most max_positions positions that evaluate to v,
/// as leading-zero-stripped equivalence classes. The search prunes branches
/// whose attainable completion interval cannot reach the target.
RepresentationSet enumerate_representations(const Integer& v, const NumberSystem& sys,
                                            std::size_t max_positions);

std::size_t count_representations(const Integer& v, const NumberSystem& sys,
                                  std::size_t max_positions);

/// Values in range with >= 2 representations, with their forms.
RedundancyReport check_uniqueness(const NumberSystem& sys, const IntegerInterval& range,
                                  std::size_t max_positions, const AuditOptions& opts = {});

/// Values in range with no representation.
RedundancyReport check_completeness(const NumberSystem& sys, const IntegerInterval& range,
                                    std::size_t max_positions, const AuditOptions& opts = {});

/// |values with >= 2 representations| / |range|, as an exact rational.
Rational redundancy_fraction(const NumberSystem& sys, const IntegerInterval& range,
                             std::size_t max_positions, const AuditOptions& opts = {});

/// Representative under the documented selection rule for systems with no
/// canonical form: shortest member, ties broken lexicographically
/// most-significant-first. Throws Unrepresentable on an empty set.
Numeral select_representative(const RepresentationSet& reps);

/// Line-oriented report serialization: `value<TAB>count<TAB>form,form,...`
/// per non-unique finding and `value<TAB>GAP` per gap.
std::string serialize_report(const RedundancyReport& report);

}  // namespace posrep
