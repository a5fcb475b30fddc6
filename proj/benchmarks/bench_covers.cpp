#include <dpcolor/constructions.hpp>
#include <dpcolor/harness.hpp>
#include <dpcolor/solver.hpp>

#include <benchmark/benchmark.h>

using namespace dpc;

namespace {

void BM_ExhaustiveCovers(benchmark::State &state) {
    // a path is colorable for every cover, so all 2^|E| signings are visited
    const int n = static_cast<int>(state.range(0));
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    WeightedInstance inst(SimpleGraph(n, edges), {0, 0});
    CoverSearchOptions opts{1, 24};
    for (auto _ : state)
        benchmark::DoNotOptimize(colorable_all_covers(inst, opts));
}
BENCHMARK(BM_ExhaustiveCovers)->Arg(11)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_ReducedCoversG1(benchmark::State &state) {
    auto [g, spec] = make_gm({1, 2}, 1);
    auto inst = gm_instance(g, spec);
    std::optional<EdgeIndex> deleted;
    if (state.range(0) >= 0)
        deleted = static_cast<EdgeIndex>(state.range(0));
    ReducedCoverSource source(inst, spec, deleted);
    CoverSearchOptions opts{1, 24};
    for (auto _ : state)
        benchmark::DoNotOptimize(search_covers(source.host(), source, opts));
    state.counters["classes"] = static_cast<double>(source.size());
}
BENCHMARK(BM_ReducedCoversG1)->Arg(-1)->Arg(0)->Arg(1)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_SampledCoversG1(benchmark::State &state) {
    auto [g, spec] = make_gm({1, 2}, 1);
    auto inst = gm_instance(g, spec).without_edge(0);
    CoverSearchOptions opts{1, 24};
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_covers(inst, static_cast<std::uint64_t>(state.range(0)), 1, opts));
}
BENCHMARK(BM_SampledCoversG1)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_EnumerateCritical(benchmark::State &state) {
    EnumerationOptions opts;
    opts.weighted = true;
    opts.workers = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_critical({1, 2}, static_cast<int>(state.range(0)), opts));
}
BENCHMARK(BM_EnumerateCritical)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace
