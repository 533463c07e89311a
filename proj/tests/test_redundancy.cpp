#include <doctest.h>

#include <set>

#include "posrep/presets.hpp"
#include "posrep/redundancy.hpp"
#include "posrep/system_spec.hpp"
#include "posrep/textio.hpp"
#include "support/oracles.hpp"

using namespace posrep;

namespace {

std::set<oracles::DigitVec> as_digit_set(const RepresentationSet& reps) {
    std::set<oracles::DigitVec> out;
    for (const Numeral& n : reps.members) {
        out.insert(n.msd_first());
    }
    return out;
}

std::set<oracles::DigitVec> forms(std::initializer_list<const char*> texts) {
    std::set<oracles::DigitVec> out;
    for (const char* t : texts) {
        out.insert(parse_numeral(t, NotationKind::Dotted).msd_first());
    }
    return out;
}

// Literal weight/range tables, so the oracle walks are independent of the
// library's weight generators.
oracles::TupleSystem signed_binary_4{{1, 2, 4, 8},
                                     {{-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}}};
oracles::TupleSystem lc019_4{{1, 20, 360, 7200},
                             {{0, 19}, {0, 19}, {0, 19}, {0, 19}}};
oracles::TupleSystem lc020_3{{1, 20, 360}, {{0, 20}, {0, 20}, {0, 20}}};

}  // namespace

TEST_SUITE_BEGIN("redundancy");

TEST_CASE("signed binary: the three forms of nine") {
    RepresentationSet reps = enumerate_representations(9, preset("signedbinary"), 4);
    CHECK(as_digit_set(reps) == forms({"1.0.0.1", "1.1.-1.-1", "1.0.1.-1"}));
    CHECK(as_digit_set(reps) == oracles::enumerate(signed_binary_4, 4, 9));
}

TEST_CASE("long count forms from the codex tables") {
    CHECK(as_digit_set(enumerate_representations(360, preset("lc-020"), 3)) ==
          forms({"1.0.0", "17.20", "18.0"}));
    CHECK(as_digit_set(enumerate_representations(380, preset("lc-020"), 3)) ==
          forms({"1.1.0", "18.20", "19.0", "1.0.20"}));
    CHECK(as_digit_set(enumerate_representations(5, preset("decimal"), 3)) == forms({"5"}));
}

TEST_CASE("member order: longest first, then lexicographic") {
    RepresentationSet reps = enumerate_representations(360, preset("lc-020"), 3);
    REQUIRE(reps.members.size() == 3);
    CHECK(format_numeral(reps.members[0], NotationKind::Dotted) == "1.0.0");
    CHECK(format_numeral(reps.members[1], NotationKind::Dotted) == "17.20");
    CHECK(format_numeral(reps.members[2], NotationKind::Dotted) == "18.0");
}

TEST_CASE("enumerate agrees with the unpruned oracle") {
    // small systems, exhaustive cross-check of every value the oracle reaches
    struct Probe {
        oracles::TupleSystem oracle;
        const char* spec;
        std::size_t positions;
    };
    Probe probes[] = {
        {signed_binary_4, "power(2)[-1..1]", 4},
        {lc020_3, "longcount()[0..20]", 3},
        {{{1, 3, 9}, {{0, 1}, {0, 1}, {0, 1}}}, "power(3)[0..1]", 3},
        {{{1, 2, 3, 5}, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}}, "fib()[0..1]", 4},
        {{{1, 12, 240}, {{0, 11}, {0, 19}, {0, 5}}}, "weights(1,12,240)[0..11]{1:0..19;2:0..5}",
         3},
        {{{2, 6, 18}, {{0, 2}, {0, 2}, {0, 2}}}, "weights(2,6,18)[0..2]", 3},
    };
    for (const Probe& probe : probes) {
        NumberSystem sys = parse_system_spec(probe.spec);
        CAPTURE(probe.spec);
        auto census = oracles::census(probe.oracle, probe.positions);
        IntegerInterval span{census.begin()->first, census.rbegin()->first};
        if (span.max > 800) span.max = 800;  // keep the cross-check quick
        for (Integer v = span.min; v <= span.max; ++v) {
            RepresentationSet reps = enumerate_representations(v, sys, probe.positions);
            CHECK(as_digit_set(reps) == oracles::enumerate(probe.oracle, probe.positions, v));
        }
    }
}

TEST_CASE("every enumerated member validates and evaluates back") {
    for (const char* name : {"lc-020", "lc-bij", "signedbinary", "zeckendorf"}) {
        NumberSystem sys = preset(name);
        CAPTURE(name);
        for (long long v : {1, 9, 20, 360, 380, 400}) {
            for (const Numeral& n : enumerate_representations(v, sys, 4).members) {
                CHECK(validate(n, sys).ok());
                CHECK(evaluate(n, sys) == v);
            }
        }
    }
}

TEST_CASE("counts from the sources") {
    CHECK(count_representations(400, preset("lc-019"), 3) == 1);
    CHECK(count_representations(399, preset("lc-019"), 3) == 2);
    CHECK(count_representations(0, preset("bijective10"), 4) == 0);
    CHECK(count_representations(0, preset("decimal"), 3) == 1);
}

TEST_CASE("uniqueness audit over the first thousand long count values") {
    RedundancyReport report = check_uniqueness(preset("lc-019"), {0, 1000}, 3);
    std::set<Integer> flagged;
    for (const RepresentationSet& f : report.non_unique) {
        CHECK(f.members.size() >= 2);
        flagged.insert(f.value);
    }
    // oracle: exact duplicate set by unpruned census
    std::set<Integer> expected;
    for (const auto& [value, count] : oracles::census(lc019_4, 3)) {
        if (count >= 2 && value <= 1000) {
            expected.insert(value);
        }
    }
    CHECK(flagged == expected);
    // which is 360..399 plus 720..759
    CHECK(expected.size() == 80);
    CHECK(expected.count(360) == 1);
    CHECK(expected.count(399) == 1);
    CHECK(expected.count(400) == 0);
    CHECK(expected.count(720) == 1);
    CHECK(expected.count(759) == 1);
    CHECK(expected.count(760) == 0);
}

TEST_CASE("decimal and balanced systems audit clean") {
    CHECK(check_uniqueness(preset("decimal"), {0, 5000}, 4).non_unique.empty());
    RedundancyReport balanced = check_uniqueness(preset("balanced3"), {-40, 40}, 4);
    CHECK(balanced.non_unique.empty());
    CHECK(check_completeness(preset("balanced3"), {-40, 40}, 4).gaps.empty());
}

TEST_CASE("completeness audits") {
    CHECK(check_completeness(preset("fibweights"), {1, 40}, 4).gaps.empty());
    RedundancyReport gaps = check_completeness(parse_system_spec("power(3)[0..1]"), {0, 10}, 3);
    CHECK(gaps.gaps == std::vector<Integer>{2, 5, 6, 7, 8});
    CHECK(check_completeness(preset("zeckendorf"), {1, 100}, 11).gaps.empty());
}

TEST_CASE("redundancy fractions") {
    CHECK(redundancy_fraction(preset("decimal"), {0, 2000}, 4) == 0);
    CHECK(redundancy_fraction(preset("lc-020"), {360, 399}, 3) == 1);
    // the audited fraction over [360, 144000) is exactly 1/9: the winal
    // digit of the canonical form is one of 18 values, two of which admit
    // the 18/19 alternative
    CHECK(redundancy_fraction(preset("lc-019"), {360, 143999}, 4) == Rational(1, 9));
}

TEST_CASE("scale guard refuses oversized audits") {
    CHECK_THROWS_AS(check_uniqueness(preset("decimal"), {0, 30'000'000}, 8), Error);
    AuditOptions tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(check_uniqueness(preset("lc-019"), {0, 1000}, 3, tiny), Error);
}

TEST_CASE("representative selection: shortest, then lexicographic") {
    RepresentationSet reps = enumerate_representations(360, preset("lc-020"), 3);
    CHECK(format_numeral(select_representative(reps), NotationKind::Dotted) == "17.20");
    RepresentationSet none = enumerate_representations(0, preset("lc-bij"), 3);
    CHECK(none.members.empty());
    CHECK_THROWS_AS(select_representative(none), Error);
}

TEST_CASE("report serialization format") {
    RedundancyReport report = check_uniqueness(preset("lc-019"), {360, 362}, 3);
    CHECK(serialize_report(report) ==
          "360\t2\t1.0.0,18.0\n361\t2\t1.0.1,18.1\n362\t2\t1.0.2,18.2\n");
    RedundancyReport with_gaps = check_completeness(parse_system_spec("power(3)[0..1]"), {0, 2}, 2);
    CHECK(serialize_report(with_gaps) == "2\tGAP\n");
}

TEST_SUITE_END();
