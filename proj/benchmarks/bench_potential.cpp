#include <dpcolor/constructions.hpp>
#include <dpcolor/potential.hpp>

#include <benchmark/benchmark.h>

using namespace dpc;

namespace {

void BM_MinPotentialSubset(benchmark::State &state) {
    auto [g, spec] = make_gm({1, 2}, static_cast<int>(state.range(0)));
    auto inst = gm_instance(g, spec);
    for (auto _ : state)
        benchmark::DoNotOptimize(min_potential_subset(inst, SubsetMode::NonemptyProper, 24, 1));
    state.counters["vertices"] = g.vertex_count();
}
BENCHMARK(BM_MinPotentialSubset)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_SparsityTest(benchmark::State &state) {
    auto [g, spec] = make_gm({1, 2}, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(sparsity_test(g, {1, 2}, 24, 1));
}
BENCHMARK(BM_SparsityTest)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
