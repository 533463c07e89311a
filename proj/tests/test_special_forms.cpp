#include <doctest.h>

#include <random>

#include "posrep/arith.hpp"
#include "posrep/presets.hpp"
#include "posrep/redundancy.hpp"
#include "posrep/special_forms.hpp"
#include "posrep/system_spec.hpp"
#include "posrep/textio.hpp"
#include "support/oracles.hpp"

using namespace posrep;

namespace {

std::string show(const Numeral& n) { return format_numeral(n, NotationKind::Dotted); }
std::string glyphs(const Numeral& n) { return format_numeral(n, NotationKind::BijectiveX); }
Numeral dotted(const char* t) { return parse_numeral(t, NotationKind::Dotted); }

// All balanced forms of v with up to max_len digits; the unique one when
// the claim holds. Literal weights, no library code.
std::set<oracles::DigitVec> balanced_oracle(const Integer& v, long long base,
                                            std::size_t max_len) {
    oracles::TupleSystem sys;
    Integer w = 1;
    long long half = (base - 1) / 2;
    for (std::size_t i = 0; i < max_len; ++i) {
        sys.weights.push_back(w);
        sys.ranges.emplace_back(-half, half);
        w *= base;
    }
    return oracles::enumerate(sys, max_len, v);
}

}  // namespace

TEST_SUITE_BEGIN("special-forms");

TEST_CASE("bijective conversion: table rows") {
    CHECK(glyphs(to_bijective(10, 10)) == "X");
    CHECK(glyphs(to_bijective(100, 10)) == "9X");
    CHECK(glyphs(to_bijective(20, 10)) == "1X");
    CHECK(glyphs(to_bijective(110, 10)) == "XX");
    CHECK(to_bijective(400, 20).msd_first() == std::vector<Digit>{19, 20});
    CHECK(glyphs(to_bijective(1, 7)) == "1");

    CHECK_THROWS_AS(to_bijective(0, 10), Error);
    CHECK_THROWS_AS(to_bijective(-4, 10), Error);
}

TEST_CASE("from_bijective inverts and range-checks") {
    CHECK(from_bijective(parse_numeral("1X", NotationKind::BijectiveX), 10) == 20);
    CHECK(from_bijective(parse_numeral("XX", NotationKind::BijectiveX), 10) == 110);
    CHECK(from_bijective(parse_numeral("1", NotationKind::BijectiveX), 2) == 1);
    CHECK_THROWS_AS(from_bijective(dotted("0.1"), 10), Error);
    CHECK_THROWS_AS(from_bijective(dotted("11"), 10), Error);

    std::mt19937_64 rng(7);
    for (long long b : {2, 10, 20}) {
        std::uniform_int_distribution<long long> pick(1, 100000);
        for (int i = 0; i < 500; ++i) {
            Integer v = pick(rng);
            CHECK(from_bijective(to_bijective(v, b), b) == v);
        }
    }
}

TEST_CASE("bijective forms are the singleton enumerations") {
    for (long long b : {2, 10, 20}) {
        NumberSystem sys = parse_system_spec("power(" + std::to_string(b) + ")[1.." +
                                             std::to_string(b) + "]");
        CAPTURE(b);
        for (Integer v = 1; v <= 5000; ++v) {
            Numeral direct = to_bijective(v, b);
            std::size_t positions = direct.length();
            RepresentationSet reps = enumerate_representations(v, sys, positions);
            REQUIRE(reps.members.size() == 1);
            CHECK(reps.members[0] == direct);
        }
    }
}

TEST_CASE("balanced conversion: derivation cases") {
    CHECK(show(to_balanced(22, BalancedSpec{3})) == "1.-1.1.1");  // 27 - 9 + 3 + 1
    CHECK(show(to_balanced(40, BalancedSpec{3})) == "1.1.1.1");
    CHECK(show(to_balanced(-40, BalancedSpec{3})) == "-1.-1.-1.-1");
    CHECK(show(to_balanced(0, BalancedSpec{3})) == "0");
    CHECK_THROWS_AS(BalancedSpec{4}, Error);
    CHECK_THROWS_AS(BalancedSpec{1}, Error);
}

TEST_CASE("balanced forms are unique and oracle-identical") {
    for (long long b : {3, 5, 7}) {
        CAPTURE(b);
        for (long long v = -121; v <= 121; ++v) {
            Numeral got = to_balanced(v, BalancedSpec{b});
            auto expected = balanced_oracle(v, b, 5);
            REQUIRE(expected.size() == 1);
            CHECK(got.msd_first() == *expected.begin());
        }
    }
}

TEST_CASE("balanced agrees with canonicalize on balanced3") {
    RegularSystemView view(preset("balanced3"));
    for (long long v = -40; v <= 40; ++v) {
        CHECK(to_balanced(v, BalancedSpec{3}) == canonicalize(Integer(v), view));
    }
}

TEST_CASE("zeckendorf: frozen forms and greedy properties") {
    CHECK(show(zeckendorf(9)) == "1.0.0.0.1");    // 8 + 1
    CHECK(show(zeckendorf(12)) == "1.0.1.0.1");   // 8 + 3 + 1
    CHECK(show(zeckendorf(1)) == "1");
    CHECK_THROWS_AS(zeckendorf(0), Error);
    CHECK_THROWS_AS(zeckendorf(-2), Error);
}

TEST_CASE("zeckendorf matches the exhaustive adjacency-free oracle") {
    auto census = oracles::zeckendorf_census(1000);
    for (Integer v = 1; v <= 1000; ++v) {
        auto it = census.find(v);
        REQUIRE(it != census.end());
        REQUIRE(it->second.size() == 1);  // uniqueness of the constrained form
        CHECK(zeckendorf(v).msd_first() == *it->second.begin());
    }
}

TEST_CASE("zeckendorf output has no adjacent ones up to 10^4") {
    NumberSystem zeck = preset("zeckendorf");
    for (Integer v = 1; v <= 10000; ++v) {
        Numeral n = zeckendorf(v);
        CHECK(evaluate(n, zeck) == v);
        const auto& digits = n.msd_first();
        for (std::size_t i = 0; i + 1 < digits.size(); ++i) {
            CHECK((digits[i] == 0 || digits[i + 1] == 0));
        }
    }
}

TEST_CASE("zeckendorf_normalize: rewrite rule cases") {
    CHECK(show(zeckendorf_normalize(dotted("0.1.1"))) == "1.0.0");
    CHECK(show(zeckendorf_normalize(dotted("1.0.1"))) == "1.0.1");
    CHECK(show(zeckendorf_normalize(dotted("1.1.1"))) == "1.0.0.1");  // value 6 = 5 + 1
    CHECK(show(zeckendorf_normalize(dotted("0"))) == "0");
    CHECK_THROWS_AS(zeckendorf_normalize(dotted("0.2.1")), Error);
}

TEST_CASE("normalize preserves value, terminates, and matches greedy") {
    NumberSystem zeck = preset("zeckendorf");
    std::mt19937_64 rng(42);
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<std::size_t> len(1, 18);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<Digit> digits(len(rng));
        for (Digit& d : digits) {
            d = coin(rng) ? 1 : 0;
        }
        Numeral raw{digits};
        Integer v = evaluate(raw, zeck);
        Numeral normal = zeckendorf_normalize(raw);
        CHECK(evaluate(normal, zeck) == v);
        CHECK(zeckendorf_normalize(normal) == normal);  // idempotent
        const auto& out = normal.msd_first();
        for (std::size_t i = 0; i + 1 < out.size(); ++i) {
            CHECK((out[i] == 0 || out[i + 1] == 0));
        }
        if (v >= 1) {
            CHECK(normal == zeckendorf(v));
        }
    }
}

TEST_CASE("each rewrite lowers the digit sum by exactly one") {
    // The pair count itself need not drop on a single rewrite (1.0.1.1
    // rewrites to 1.1.0.0), so the monovariant is the number of ones.
    Numeral tricky = dotted("1.0.1.1");
    Numeral done = zeckendorf_normalize(tricky);
    CHECK(show(done) == "1.0.0.0.0");  // 5 + 2 + 1 = 8
    Integer ones_before = 3, ones_after = 0;
    for (const Digit& d : done.msd_first()) {
        if (d == 1) ++ones_after;
    }
    CHECK(ones_after == 1);
    CHECK(ones_after < ones_before);
}

TEST_SUITE_END();
