#include "posrep/redundancy.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "posrep/textio.hpp"

namespace posrep {

namespace {

constexpr long long kMaxAuditRange = 2'000'000;

// Shared depth-first search over digit tuples. Tuples are walked per exact
// length with a nonzero top digit, so each leading-zero equivalence class
// is visited exactly once. Branches are cut when the attainable completion
// interval (partial value plus the best and worst the remaining positions
// can contribute) misses the target interval.
class TupleSearch {
public:
    TupleSearch(const NumberSystem& sys, std::size_t max_positions, IntegerInterval target,
                std::uint64_t budget)
        : sys_(sys), max_positions_(max_positions), target_(std::move(target)), budget_(budget) {
        if (max_positions_ == 0) {
            throw Error(ErrorKind::Domain, "max positions must be positive");
        }
        if (sys_.max_positions() && max_positions_ > *sys_.max_positions()) {
            throw Error(ErrorKind::Length,
                        "requested positions exceed the system's position bound");
        }
        weights_ = sys_.weights().weight_prefix(max_positions_);
        ranges_.reserve(max_positions_);
        for (std::size_t i = 0; i < max_positions_; ++i) {
            ranges_.push_back(sys_.range_at(i));
        }
        attain_lo_.assign(max_positions_ + 1, 0);
        attain_hi_.assign(max_positions_ + 1, 0);
        for (std::size_t i = 0; i < max_positions_; ++i) {
            attain_lo_[i + 1] = attain_lo_[i] + ranges_[i].lo * weights_[i];
            attain_hi_[i + 1] = attain_hi_[i] + ranges_[i].hi * weights_[i];
        }
    }

    /// Calls hit(value, digits most-significant-first) for every stripped
    /// representation whose value lies in the target interval.
    void run(const std::function<void(const Integer&, const std::vector<Digit>&)>& hit) {
        std::vector<Digit> digits;
        for (std::size_t length = 1; length <= max_positions_; ++length) {
            digits.clear();
            descend(length, length - 1, 0, digits, hit);
        }
    }

private:
    void descend(std::size_t length, std::size_t position, const Integer& acc,
                 std::vector<Digit>& digits,
                 const std::function<void(const Integer&, const std::vector<Digit>&)>& hit) {
        const DigitRange& range = ranges_[position];
        const Integer& weight = weights_[position];
        // acc + d*w + completion must be able to land in the target.
        Integer lo = range.lo;
        Integer hi = range.hi;
        Integer lo_by_target = ceil_div(target_.min - acc - attain_hi_[position], weight);
        Integer hi_by_target = floor_div(target_.max - acc - attain_lo_[position], weight);
        if (lo_by_target > lo) lo = lo_by_target;
        if (hi_by_target < hi) hi = hi_by_target;

        for (Integer d = lo; d <= hi; ++d) {
            if (++spent_ > budget_) {
                throw Error(ErrorKind::Scale,
                            "audit refused: candidate budget exhausted; narrow the range, lower "
                            "max positions, or raise the budget");
            }
            if (position + 1 == length && length > 1 && d == 0) {
                continue;  // longer forms with a leading zero duplicate shorter ones
            }
            digits.push_back(d);
            if (position == 0) {
                hit(acc + d * weight, digits);
            } else {
                descend(length, position - 1, acc + d * weight, digits, hit);
            }
            digits.pop_back();
        }
    }

    const NumberSystem& sys_;
    std::size_t max_positions_;
    IntegerInterval target_;
    std::uint64_t budget_;
    std::uint64_t spent_ = 0;
    std::vector<Integer> weights_;
    std::vector<DigitRange> ranges_;
    std::vector<Integer> attain_lo_;
    std::vector<Integer> attain_hi_;
};

bool display_order(const Numeral& a, const Numeral& b) {
    if (a.length() != b.length()) {
        return a.length() > b.length();
    }
    return std::lexicographical_compare(a.msd_first().begin(), a.msd_first().end(),
                                        b.msd_first().begin(), b.msd_first().end());
}

std::vector<std::uint32_t> count_over_range(const NumberSystem& sys, const IntegerInterval& range,
                                            std::size_t max_positions, const AuditOptions& opts) {
    if (range.min > range.max) {
        throw Error(ErrorKind::Domain, "audit range is empty");
    }
    Integer cardinality = range.cardinality();
    if (cardinality > kMaxAuditRange) {
        throw Error(ErrorKind::Scale,
                    "audit refused: range spans " + cardinality.str() + " values (limit " +
                        std::to_string(kMaxAuditRange) + "); narrow the range");
    }
    std::vector<std::uint32_t> counts(cardinality.convert_to<std::size_t>(), 0);
    TupleSearch search(sys, max_positions, range, opts.budget);
    search.run([&](const Integer& value, const std::vector<Digit>&) {
        ++counts[(value - range.min).convert_to<std::size_t>()];
    });
    return counts;
}

}  // namespace

RepresentationSet enumerate_representations(const Integer& v, const NumberSystem& sys,
                                            std::size_t max_positions) {
    RepresentationSet out;
    out.value = v;
    out.max_positions_used = max_positions;
    TupleSearch search(sys, max_positions, IntegerInterval{v, v},
                       std::numeric_limits<std::uint64_t>::max());
    search.run([&](const Integer&, const std::vector<Digit>& digits) {
        out.members.emplace_back(digits);
    });
    std::sort(out.members.begin(), out.members.end(), display_order);
    return out;
}

std::size_t count_representations(const Integer& v, const NumberSystem& sys,
                                  std::size_t max_positions) {
    return enumerate_representations(v, sys, max_positions).members.size();
}

RedundancyReport check_uniqueness(const NumberSystem& sys, const IntegerInterval& range,
                                  std::size_t max_positions, const AuditOptions& opts) {
    auto counts = count_over_range(sys, range, max_positions, opts);
    RedundancyReport report;
    report.range = range;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] >= 2) {
            report.non_unique.push_back(
                enumerate_representations(range.min + i, sys, max_positions));
        }
    }
    report.fraction_redundant =
        Rational(Integer(report.non_unique.size()), range.cardinality());
    return report;
}

RedundancyReport check_completeness(const NumberSystem& sys, const IntegerInterval& range,
                                    std::size_t max_positions, const AuditOptions& opts) {
    auto counts = count_over_range(sys, range, max_positions, opts);
    RedundancyReport report;
    report.range = range;
    Integer non_unique = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) {
            report.gaps.push_back(range.min + i);
        } else if (counts[i] >= 2) {
            ++non_unique;
        }
    }
    report.fraction_redundant = Rational(non_unique, range.cardinality());
    return report;
}

Rational redundancy_fraction(const NumberSystem& sys, const IntegerInterval& range,
                             std::size_t max_positions, const AuditOptions& opts) {
    auto counts = count_over_range(sys, range, max_positions, opts);
    Integer non_unique = 0;
    for (std::uint32_t c : counts) {
        if (c >= 2) {
            ++non_unique;
        }
    }
    return Rational(non_unique, range.cardinality());
}

Numeral select_representative(const RepresentationSet& reps) {
    if (reps.members.empty()) {
        throw Error(ErrorKind::Unrepresentable,
                    "value " + reps.value.str() + " has no representation within " +
                        std::to_string(reps.max_positions_used) + " positions");
    }
    return *std::min_element(reps.members.begin(), reps.members.end(), Numeral::length_lex_less);
}

std::string serialize_report(const RedundancyReport& report) {
    std::string out;
    for (const RepresentationSet& finding : report.non_unique) {
        out += finding.value.str();
        out += '\t';
        out += std::to_string(finding.members.size());
        out += '\t';
        bool first = true;
        for (const Numeral& form : finding.members) {
            if (!first) out += ',';
            out += format_numeral(form, NotationKind::Dotted);
            first = false;
        }
        out += '\n';
    }
    for (const Integer& gap : report.gaps) {
        out += gap.str();
        out += "\tGAP\n";
    }
    return out;
}

}  // namespace posrep
