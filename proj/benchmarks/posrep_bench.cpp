#include <benchmark/benchmark.h>

#include "posrep/arith.hpp"
#include "posrep/mayacal.hpp"
#include "posrep/presets.hpp"
#include "posrep/redundancy.hpp"
#include "posrep/special_forms.hpp"
#include "posrep/textio.hpp"

using namespace posrep;

namespace {

void BM_evaluate_long_count(benchmark::State& state) {
    NumberSystem sys = preset("lc-std");
    Numeral n = parse_numeral("13.0.5.17.17", NotationKind::Dotted);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(n, sys));
    }
}
BENCHMARK(BM_evaluate_long_count);

void BM_canonicalize_long_count(benchmark::State& state) {
    RegularSystemView view(preset("lc-std"));
    Integer v = 1874157;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonicalize(v, view));
    }
}
BENCHMARK(BM_canonicalize_long_count);

void BM_enumerate_redundant_value(benchmark::State& state) {
    NumberSystem sys = preset("lc-020");
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_representations(380, sys, 3).members.size());
    }
}
BENCHMARK(BM_enumerate_redundant_value);

void BM_uniqueness_audit_one_katun(benchmark::State& state) {
    NumberSystem sys = preset("lc-019");
    for (auto _ : state) {
        benchmark::DoNotOptimize(redundancy_fraction(sys, {360, 7559}, 4));
    }
}
BENCHMARK(BM_uniqueness_audit_one_katun);

void BM_balanced_conversion(benchmark::State& state) {
    BalancedSpec spec{3};
    Integer v = -1234567;
    for (auto _ : state) {
        benchmark::DoNotOptimize(to_balanced(v, spec));
    }
}
BENCHMARK(BM_balanced_conversion);

void BM_zeckendorf(benchmark::State& state) {
    Integer v = 987654;
    for (auto _ : state) {
        benchmark::DoNotOptimize(zeckendorf(v));
    }
}
BENCHMARK(BM_zeckendorf);

void BM_calendar_round_trip(benchmark::State& state) {
    using namespace posrep::maya;
    DayCount d{1874157};
    for (auto _ : state) {
        LongCountDate lc = daycount_to_lc(d);
        benchmark::DoNotOptimize(verify_triple(lc, tzolkin_of(d), haab_of(d)));
    }
}
BENCHMARK(BM_calendar_round_trip);

}  // namespace

BENCHMARK_MAIN();
