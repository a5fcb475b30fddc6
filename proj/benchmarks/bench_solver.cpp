#include <dpcolor/constructions.hpp>
#include <dpcolor/solver.hpp>

#include <benchmark/benchmark.h>

using namespace dpc;

namespace {

void BM_FindColoringBadCover(benchmark::State &state) {
    DefectParams p{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
    auto [g, spec] = make_gm(p, static_cast<int>(state.range(2)));
    auto inst = gm_instance(g, spec);
    auto h = make_hm(g, spec);
    ColoringSearch search(inst);
    SearchStats stats;
    for (auto _ : state)
        benchmark::DoNotOptimize(search.solve(h, &stats));
    state.counters["nodes"] = benchmark::Counter(static_cast<double>(stats.nodes_expanded) /
                                                 static_cast<double>(state.iterations()));
}
BENCHMARK(BM_FindColoringBadCover)->Args({1, 2, 1})->Args({1, 2, 2})->Args({1, 3, 1})->Args({2, 4, 1})
    ->Unit(benchmark::kMicrosecond);

void BM_FindColoringAllParallel(benchmark::State &state) {
    auto [g, spec] = make_gm({1, 2}, static_cast<int>(state.range(0)));
    auto inst = gm_instance(g, spec);
    auto s = CoverSigning::all(g.edge_count(), Sign::Parallel);
    ColoringSearch search(inst);
    for (auto _ : state)
        benchmark::DoNotOptimize(search.solve(s));
}
BENCHMARK(BM_FindColoringAllParallel)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_BruteForceOracle(benchmark::State &state) {
    auto [g, spec] = make_gm({1, 2}, 1);
    auto inst = gm_instance(g, spec);
    auto h = make_hm(g, spec);
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_oracle(inst, h));
}
BENCHMARK(BM_BruteForceOracle)->Unit(benchmark::kMillisecond);

} // namespace
