#include <benchmark/benchmark.h>

#include "ck/chord_diagram.hpp"
#include "ck/finite_type.hpp"
#include "ck/invariants.hpp"
#include "ck/realize.hpp"
#include "ck/word_ops.hpp"
#include "ck/word_sequence.hpp"

namespace {

void bm_canonical_form(benchmark::State& state) {
    const auto d = ck::parse_diagram("1+ 2- 3+ 4- 1 3 2 5+ 4 6- 5 6");
    for (auto _ : state) benchmark::DoNotOptimize(ck::canonical_form(d));
}
BENCHMARK(bm_canonical_form);

void bm_enumerate_order3(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(ck::enumerate_diagrams(3, {1, -1}));
}
BENCHMARK(bm_enumerate_order3);

void bm_sigma(benchmark::State& state) {
    const auto w = ck::parse_word("[1 x1 [2 x2 x1 ]1+ x2^-1 ]2-");
    for (auto _ : state) benchmark::DoNotOptimize(ck::sigma(w));
}
BENCHMARK(bm_sigma);

void bm_realize_word(benchmark::State& state) {
    const auto w = ck::parse_word("[1 x1 x1 ]1+");
    for (auto _ : state) benchmark::DoNotOptimize(ck::realize_word(w));
}
BENCHMARK(bm_realize_word);

void bm_fingerprint(benchmark::State& state) {
    const auto P = ck::realize_word(ck::parse_word("[1 x1 x1 ]1+"));
    for (auto _ : state) benchmark::DoNotOptimize(ck::fingerprint_of(P, 24));
}
BENCHMARK(bm_fingerprint);

void bm_jones(benchmark::State& state) {
    const auto P = ck::realize_word(ck::parse_word("[1 x1 ]1-"));
    for (auto _ : state) benchmark::DoNotOptimize(ck::jones_poly(P));
}
BENCHMARK(bm_jones);

void bm_c_transform(benchmark::State& state) {
    const auto f = ck::memoize([](const ck::chord_diagram& d) {
        return ck::bigrat(ck::v2(d));
    });
    const auto d = ck::parse_diagram("1+ 2+ 3+ 1 2 3");
    for (auto _ : state) benchmark::DoNotOptimize(ck::c_transform(f, d));
}
BENCHMARK(bm_c_transform);

}  // namespace

BENCHMARK_MAIN();
