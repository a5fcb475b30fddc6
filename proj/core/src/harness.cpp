#include <dpcolor/harness.hpp>
#include <dpcolor/parallel.hpp>
#include <dpcolor/potential.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace dpc {

std::string to_string(StrategyKind kind) {
    switch (kind) {
    case StrategyKind::Exhaustive:
        return "exhaustive";
    case StrategyKind::Reduced:
        return "reduced";
    case StrategyKind::Sampled:
        return "sampled";
    }
    return "?";
}

std::string to_string(Criticality c) {
    switch (c) {
    case Criticality::Critical:
        return "critical";
    case Criticality::Colorable:
        return "colorable";
    case Criticality::NotCritical:
        return "not-critical";
    case Criticality::Unrefuted:
        return "unrefuted";
    }
    return "?";
}

namespace {

AllCoversResult run_strategy(const WeightedInstance &instance, const Strategy &strategy,
                             const CoverSearchOptions &options, std::optional<EdgeIndex> deleted = std::nullopt,
                             const WeightedInstance *base = nullptr) {
    switch (strategy.kind) {
    case StrategyKind::Exhaustive:
        return colorable_all_covers(instance, options);
    case StrategyKind::Sampled:
        return sample_covers(instance, strategy.count, strategy.seed, options);
    case StrategyKind::Reduced: {
        ReducedCoverSource source(base ? *base : instance, *strategy.spec, deleted);
        return search_covers(source.host(), source, options);
    }
    }
    throw std::logic_error("unknown strategy");
}

} // namespace

CriticalityVerdict is_critical(const WeightedInstance &instance, const Strategy &strategy,
                               const CoverSearchOptions &options) {
    const auto &g = instance.graph();
    if (strategy.kind == StrategyKind::Reduced && !strategy.spec)
        throw std::invalid_argument("reduced strategy needs a construction spec");
    if (strategy.kind == StrategyKind::Sampled && strategy.count == 0)
        throw std::invalid_argument("sampled strategy needs a positive sample count");
    if (strategy.kind == StrategyKind::Exhaustive && g.edge_count() > options.max_edges)
        throw std::invalid_argument("exhaustive strategy infeasible: " + std::to_string(g.edge_count()) +
                                    " edges exceed the ceiling of " + std::to_string(options.max_edges));

    CriticalityVerdict out;
    out.certifying = strategy.certifying();
    out.potential = total_potential(instance);

    auto whole = run_strategy(instance, strategy, options);
    out.counters.add(whole);
    if (whole.colorable()) {
        out.verdict = Criticality::Colorable;
        return out;
    }
    out.witness = whole.witness;

    std::vector<EdgeOrbit> orbits;
    if (strategy.kind == StrategyKind::Reduced) {
        orbits = edge_orbits(g, *strategy.spec);
    } else {
        for (EdgeIndex e = 0; e < g.edge_count(); ++e)
            orbits.push_back({e, {e}});
    }

    for (const auto &orbit : orbits) {
        auto r = strategy.kind == StrategyKind::Reduced
                     ? run_strategy(instance, strategy, options, orbit.representative, &instance)
                     : run_strategy(instance.without_edge(orbit.representative), strategy, options);
        out.counters.add(r);
        out.deletions.push_back({orbit.representative, orbit.members, r});
        if (!r.colorable()) {
            out.verdict = Criticality::NotCritical;
            out.failure = FailingSubgraph{g.edge(orbit.representative), std::nullopt, *r.witness};
            return out;
        }
    }

    if (g.vertex_count() > 1) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) != 0)
                continue;
            if (strategy.kind == StrategyKind::Reduced)
                throw std::invalid_argument("reduced strategy does not support isolated vertices");
            auto r = run_strategy(instance.without_vertex(v), strategy, options);
            out.counters.add(r);
            out.isolated_checked.push_back(v);
            if (!r.colorable()) {
                out.verdict = Criticality::NotCritical;
                out.failure = FailingSubgraph{std::nullopt, v, *r.witness};
                return out;
            }
        }
    }

    out.verdict = strategy.certifying() ? Criticality::Critical : Criticality::Unrefuted;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct PairTable {
    int n;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> index; // index[a][b] -> bit

    explicit PairTable(int n_) : n(n_), index(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_), -1)) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                index[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(pairs.size());
                index[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = static_cast<int>(pairs.size());
                pairs.emplace_back(a, b);
            }
    }
};

std::uint32_t relabel(const PairTable &t, std::uint32_t code, const std::vector<int> &perm) {
    std::uint32_t out = 0;
    for (std::size_t p = 0; p < t.pairs.size(); ++p)
        if ((code >> p) & 1U) {
            auto [a, b] = t.pairs[p];
            out |= 1U << t.index[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])]
                                [static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])];
        }
    return out;
}

/// Minimum code over relabellings that list vertices by nonincreasing degree.
std::uint32_t canonical_code(const PairTable &t, std::uint32_t code) {
    const int n = t.n;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (std::size_t p = 0; p < t.pairs.size(); ++p)
        if ((code >> p) & 1U) {
            ++degree[static_cast<std::size_t>(t.pairs[p].first)];
            ++degree[static_cast<std::size_t>(t.pairs[p].second)];
        }
    std::vector<int> by_degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        by_degree[static_cast<std::size_t>(v)] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
        return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
    });
    // cells of equal degree, as [begin, end) ranges of positions
    std::vector<std::pair<int, int>> cells;
    for (int s = 0; s < n;) {
        int e = s;
        while (e < n && degree[static_cast<std::size_t>(by_degree[static_cast<std::size_t>(e)])] ==
                            degree[static_cast<std::size_t>(by_degree[static_cast<std::size_t>(s)])])
            ++e;
        cells.emplace_back(s, e);
        s = e;
    }

    std::uint32_t best = ~0U;
    std::vector<int> order = by_degree; // order[position] = old vertex
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::function<void(std::size_t)> walk = [&](std::size_t cell) {
        if (cell == cells.size()) {
            for (int pos = 0; pos < n; ++pos)
                perm[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
            best = std::min(best, relabel(t, code, perm));
            return;
        }
        auto [s, e] = cells[cell];
        std::sort(order.begin() + s, order.begin() + e);
        do {
            walk(cell + 1);
        } while (std::next_permutation(order.begin() + s, order.begin() + e));
    };
    walk(0);
    return best;
}

} // namespace

std::vector<SimpleGraph> nonisomorphic_graphs(int n) {
    if (n < 0 || n > 7)
        throw std::length_error("graph enumeration supports 0 <= n <= 7");
    PairTable t(n);
    std::vector<SimpleGraph> out;
    const std::uint32_t codes = 1U << t.pairs.size();
    for (std::uint32_t code = 0; code < codes; ++code) {
        if (canonical_code(t, code) != code)
            continue;
        std::vector<Edge> edges;
        for (std::size_t p = 0; p < t.pairs.size(); ++p)
            if ((code >> p) & 1U)
                edges.emplace_back(t.pairs[p].first, t.pairs[p].second);
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

EnumerationReport enumerate_critical(const DefectParams &params, int n, const EnumerationOptions &options) {
    validate(params);
    if (n < 1 || n > options.max_vertices)
        throw std::length_error("critical enumeration supports 1 <= n <= " + std::to_string(options.max_vertices));

    EnumerationReport report;
    report.params = params;
    report.n = n;
    report.weighted = options.weighted;
    const int i = params.i, j = params.j;
    report.bound_applicable = (i == 1 || i == 2) && j >= 2 * i;
    const int numerator = (2 * i + 1) * n + j - i + 1;
    report.edge_bound = (numerator + i) / (i + 1);

    const auto graphs = nonisomorphic_graphs(n);
    report.graphs_examined = graphs.size();

    std::vector<Capacity> choices;
    if (options.weighted) {
        for (int c1 = -1; c1 <= i; ++c1)
            for (int c2 = -1; c2 <= j; ++c2)
                choices.push_back({c1, c2});
    } else {
        choices.push_back({i, j});
    }
    std::uint64_t per_graph = 1;
    for (int v = 0; v < n; ++v)
        per_graph *= choices.size();
    report.pairs_examined = per_graph * graphs.size();

    const std::uint64_t total = report.pairs_examined;
    std::atomic<std::uint64_t> next{0};
    std::mutex found_mutex;
    std::vector<std::pair<std::uint64_t, CriticalPair>> found;
    CoverSearchOptions inner;
    inner.workers = 1;

    run_workers(options.workers, [&](unsigned) {
        for (;;) {
            std::uint64_t k = next.fetch_add(1);
            if (k >= total)
                return;
            const auto &g = graphs[static_cast<std::size_t>(k / per_graph)];
            std::uint64_t code = k % per_graph;
            CapacityFunction caps(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) {
                caps[static_cast<std::size_t>(v)] = choices[static_cast<std::size_t>(code % choices.size())];
                code /= choices.size();
            }
            WeightedInstance instance(g, params, std::move(caps));
            auto verdict = is_critical(instance, Strategy::exhaustive(), inner);
            if (verdict.verdict != Criticality::Critical)
                continue;
            std::lock_guard lock(found_mutex);
            found.emplace_back(k, CriticalPair{instance, *verdict.witness, verdict.potential});
        }
    });

    std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    const Capacity uniform{i, j};
    for (auto &[k, pair] : found) {
        if (report.bound_applicable && pair.potential > i - j - 1)
            ++report.potential_violations;
        bool is_uniform = std::all_of(pair.instance.capacities().begin(), pair.instance.capacities().end(),
                                      [&](const Capacity &c) { return c == uniform; });
        if (is_uniform) {
            int m = pair.instance.graph().edge_count();
            if (!report.min_edges || m < *report.min_edges)
                report.min_edges = m;
            if (report.bound_applicable && m < report.edge_bound)
                ++report.bound_violations;
        }
        report.critical.push_back(std::move(pair));
    }
    return report;
}

// ---------------------------------------------------------------------------

SharpnessReport verify_sharpness_suite(const std::vector<DefectParams> &pairs, const std::vector<int> &ms,
                                       const SuiteOptions &options) {
    SharpnessReport report;
    for (const auto &p : pairs) {
        for (int m : ms) {
            SharpnessEntry entry;
            entry.params = p;
            entry.m = m;
            entry.counts = verify_counts(p, m);
            auto [g, spec] = make_gm(p, m);
            auto instance = gm_instance(g, spec);
            SearchStats stats;
            entry.hm_colorable = find_coloring(instance, make_hm(g, spec), &stats).has_value();
            entry.hm_nodes = stats.nodes_expanded;
            if (options.criticality)
                entry.criticality = is_critical(instance, Strategy::reduced(spec), options.search);
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

} // namespace dpc
