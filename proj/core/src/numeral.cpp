#include "posrep/numeral.hpp"

#include <algorithm>

#include "posrep/error.hpp"

namespace posrep {

Numeral::Numeral(std::vector<Digit> most_significant_first)
    : digits_(std::move(most_significant_first)) {
    if (digits_.empty()) {
        throw Error(ErrorKind::Semantic, "a numeral needs at least one digit");
    }
}

Numeral::Numeral(std::initializer_list<long long> most_significant_first) {
    digits_.reserve(most_significant_first.size());
    for (long long d : most_significant_first) {
        digits_.emplace_back(d);
    }
    if (digits_.empty()) {
        throw Error(ErrorKind::Semantic, "a numeral needs at least one digit");
    }
}

Numeral Numeral::from_lsd(std::vector<Digit> least_significant_first) {
    std::reverse(least_significant_first.begin(), least_significant_first.end());
    return Numeral(std::move(least_significant_first));
}

Numeral Numeral::without_leading_zeros() const {
    std::size_t first = 0;
    while (first + 1 < digits_.size() && digits_[first] == 0) {
        ++first;
    }
    if (first == 0) {
        return *this;
    }
    return Numeral(std::vector<Digit>(digits_.begin() + static_cast<std::ptrdiff_t>(first),
                                      digits_.end()));
}

bool Numeral::length_lex_less(const Numeral& a, const Numeral& b) {
    if (a.length() != b.length()) {
        return a.length() < b.length();
    }
    return std::lexicographical_compare(a.msd_first().begin(), a.msd_first().end(),
                                        b.msd_first().begin(), b.msd_first().end());
}

}  // namespace posrep
