#include "posrep/special_forms.hpp"

#include <utility>

#include "posrep/error.hpp"

namespace posrep {

BalancedSpec::BalancedSpec(Integer b) : base(std::move(b)) {
    if (base < 3 || base % 2 == 0) {
        throw Error(ErrorKind::Semantic, "balanced base must be an odd integer >= 3");
    }
}

Numeral to_bijective(const Integer& v, const Integer& base) {
    if (base < 2) {
        throw Error(ErrorKind::Semantic, "bijective base must be at least 2");
    }
    if (v < 1) {
        throw Error(ErrorKind::Unrepresentable,
                    "value " + v.str() + " has no zeroless form; representable values are >= 1");
    }
    std::vector<Digit> lsd;
    Integer rest = v;
    while (rest != 0) {
        Integer digit = floor_mod(rest - 1, base) + 1;
        rest = (rest - digit) / base;
        lsd.push_back(std::move(digit));
    }
    return Numeral::from_lsd(std::move(lsd));
}

Integer from_bijective(const Numeral& n, const Integer& base) {
    if (base < 2) {
        throw Error(ErrorKind::Semantic, "bijective base must be at least 2");
    }
    Integer total = 0;
    for (const Digit& d : n.msd_first()) {
        if (d < 1 || d > base) {
            throw Error(ErrorKind::Domain,
                        "digit " + d.str() + " is outside the zeroless range 1.." + base.str());
        }
        total = total * base + d;
    }
    return total;
}

Numeral to_balanced(const Integer& v, const BalancedSpec& spec) {
    if (v == 0) {
        return Numeral({0});
    }
    const Integer bound = spec.digit_bound();
    std::vector<Digit> lsd;
    Integer rest = v;
    while (rest != 0) {
        Integer digit = floor_mod(rest + bound, spec.base) - bound;
        rest = (rest - digit) / spec.base;
        lsd.push_back(std::move(digit));
    }
    return Numeral::from_lsd(std::move(lsd));
}

namespace {

// Fibonacci weights 1, 2, 3, 5, ... up to the largest one <= v.
std::vector<Integer> fibonacci_weights_up_to(const Integer& v) {
    std::vector<Integer> weights{1};
    Integer a = 1, b = 2;
    while (b <= v) {
        weights.push_back(b);
        Integer next = a + b;
        a = b;
        b = next;
    }
    return weights;
}

}  // namespace

Numeral zeckendorf(const Integer& v) {
    if (v < 1) {
        throw Error(ErrorKind::Unrepresentable,
                    "value " + v.str() + " has no Zeckendorf form; representable values are >= 1");
    }
    std::vector<Integer> weights = fibonacci_weights_up_to(v);
    std::vector<Digit> msd(weights.size(), 0);
    Integer rest = v;
    for (std::size_t i = weights.size(); i-- > 0;) {
        if (weights[i] <= rest) {
            msd[weights.size() - 1 - i] = 1;
            rest -= weights[i];
        }
    }
    return Numeral(std::move(msd));
}

Numeral zeckendorf_normalize(const Numeral& n) {
    std::vector<Digit> lsd(n.msd_first().rbegin(), n.msd_first().rend());
    for (const Digit& d : lsd) {
        if (d != 0 && d != 1) {
            throw Error(ErrorKind::Domain, "digit " + d.str() + " is outside {0,1}");
        }
    }
    // Rewrite the topmost adjacent pair first: the digit above it is then
    // guaranteed to be 0, so positions stay within {0,1}.
    while (true) {
        std::size_t pair = lsd.size();
        for (std::size_t i = lsd.size() - 1; i-- > 0;) {
            if (lsd[i] == 1 && lsd[i + 1] == 1) {
                pair = i;
                break;
            }
        }
        if (pair == lsd.size()) {
            break;
        }
        lsd[pair] = 0;
        lsd[pair + 1] = 0;
        if (pair + 2 >= lsd.size()) {
            lsd.resize(pair + 3, 0);
        }
        lsd[pair + 2] += 1;
    }
    while (lsd.size() > 1 && lsd.back() == 0) {
        lsd.pop_back();
    }
    return Numeral::from_lsd(std::move(lsd));
}

}  // namespace posrep
