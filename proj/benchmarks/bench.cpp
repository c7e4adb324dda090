#include "hcp3/gadgets.hpp"
#include "hcp3/generators.hpp"
#include "hcp3/oracle.hpp"
#include "hcp3/reductions.hpp"

#include <benchmark/benchmark.h>

using namespace hcp3;

static void bm_sgate_k10(benchmark::State& state) {
    graph g = complete(10);
    for (auto _ : state) benchmark::DoNotOptimize(sgate_pipeline(g));
}
BENCHMARK(bm_sgate_k10);

static void bm_sgate_knight(benchmark::State& state) {
    graph g = named("knight-8x8");
    for (auto _ : state) benchmark::DoNotOptimize(sgate_pipeline(g));
}
BENCHMARK(bm_sgate_knight);

static void bm_quick_k10(benchmark::State& state) {
    graph g = complete(10);
    for (auto _ : state) benchmark::DoNotOptimize(quick_3hcp(g));
}
BENCHMARK(bm_quick_k10);

static void bm_quick_paley29(benchmark::State& state) {
    graph g = named("paley-29");
    for (auto _ : state) benchmark::DoNotOptimize(quick_3hcp(g));
}
BENCHMARK(bm_quick_paley29);

static void bm_bound_degree_k10(benchmark::State& state) {
    graph g = directed_view(complete(10)).first;
    for (auto _ : state) benchmark::DoNotOptimize(bound_degree(g, 3));
}
BENCHMARK(bm_bound_degree_k10);

static void bm_oracle_petersen(benchmark::State& state) {
    graph g = petersen();
    for (auto _ : state) benchmark::DoNotOptimize(find_hc(g));
}
BENCHMARK(bm_oracle_petersen);

static void bm_oracle_cubified_k10(benchmark::State& state) {
    conversion c = quick_3hcp(complete(10));
    for (auto _ : state) benchmark::DoNotOptimize(find_hc(c.result));
}
BENCHMARK(bm_oracle_cubified_k10);

BENCHMARK_MAIN();
