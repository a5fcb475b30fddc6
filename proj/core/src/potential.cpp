#include <dpcolor/parallel.hpp>
#include <dpcolor/potential.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <string>

namespace dpc {

std::vector<Vertex> mask_vertices(VertexMask mask) {
    std::vector<Vertex> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

VertexMask vertices_mask(const std::vector<Vertex> &vertices) {
    VertexMask mask = 0;
    for (Vertex v : vertices) {
        if (v < 0 || v >= 64)
            throw std::out_of_range("vertex " + std::to_string(v) + " does not fit a 64-bit mask");
        mask |= VertexMask{1} << v;
    }
    return mask;
}

std::vector<VertexMask> adjacency_masks(const SimpleGraph &g) {
    if (g.vertex_count() > 64)
        throw std::length_error("adjacency masks need n <= 64");
    std::vector<VertexMask> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto &e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= VertexMask{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= VertexMask{1} << e.u;
    }
    return adj;
}

int vertex_potential(const Capacity &c, const DefectParams &params) {
    return params.i - params.j + 1 + c.poor + c.rich;
}

namespace {

int induced_edges(const SimpleGraph &g, VertexMask subset) {
    int count = 0;
    for (const auto &e : g.edges())
        if (((subset >> e.u) & 1U) && ((subset >> e.v) & 1U))
            ++count;
    return count;
}

void check_mask(const SimpleGraph &g, VertexMask subset) {
    if (g.vertex_count() > 64)
        throw std::length_error("vertex masks need n <= 64");
    if (g.vertex_count() < 64 && (subset >> g.vertex_count()) != 0)
        throw std::out_of_range("subset contains vertices outside the graph");
}

/// Visits every subset of the n vertices exactly once with running tallies
/// (size, induced edges, sum of vertex weights), split by the top prefix
/// bits across workers. visit(worker, mask, size, edges, weight).
template <typename Visit>
void scan_subsets(const std::vector<VertexMask> &adj, const std::vector<int> &weight, unsigned workers,
                  Visit &&visit) {
    const int n = static_cast<int>(adj.size());
    const int prefix_bits = std::min(n, 6);
    const int low_bits = n - prefix_bits;
    const std::uint64_t prefixes = std::uint64_t{1} << prefix_bits;
    std::atomic<std::uint64_t> next{0};
    workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), prefixes));

    run_workers(workers, [&](unsigned w) {
        for (;;) {
            std::uint64_t p = next.fetch_add(1);
            if (p >= prefixes)
                return;
            VertexMask current = p << low_bits;
            int size = std::popcount(current);
            int edges = 0;
            long long wsum = 0;
            for (VertexMask rest = current; rest; rest &= rest - 1) {
                int v = std::countr_zero(rest);
                edges += std::popcount(adj[static_cast<std::size_t>(v)] & current);
                wsum += weight[static_cast<std::size_t>(v)];
            }
            edges /= 2;
            visit(w, current, size, edges, wsum);
            const std::uint64_t steps = std::uint64_t{1} << low_bits;
            for (std::uint64_t k = 1; k < steps; ++k) {
                int v = std::countr_zero(k);
                VertexMask bit = VertexMask{1} << v;
                int joined = std::popcount(adj[static_cast<std::size_t>(v)] & current);
                if (current & bit) {
                    current &= ~bit;
                    --size;
                    edges -= joined;
                    wsum -= weight[static_cast<std::size_t>(v)];
                } else {
                    current |= bit;
                    ++size;
                    edges += joined;
                    wsum += weight[static_cast<std::size_t>(v)];
                }
                visit(w, current, size, edges, wsum);
            }
        }
    });
}

void check_ceiling(const SimpleGraph &g, int max_vertices) {
    if (g.vertex_count() > max_vertices || g.vertex_count() > 62)
        throw std::length_error("exhaustive subset search limited to " + std::to_string(max_vertices) +
                                " vertices (graph has " + std::to_string(g.vertex_count()) + ")");
}

} // namespace

int subset_potential(const WeightedInstance &instance, VertexMask subset) {
    const auto &g = instance.graph();
    check_mask(g, subset);
    int sum = 0;
    for (Vertex v : mask_vertices(subset))
        sum += vertex_potential(instance.capacity(v), instance.params());
    return sum - (instance.params().i + 1) * induced_edges(g, subset);
}

int subset_potential(const WeightedInstance &instance, const std::vector<Vertex> &subset) {
    const auto &g = instance.graph();
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    int sum = 0;
    for (Vertex v : subset) {
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("vertex " + std::to_string(v) + " outside the graph");
        if (in[static_cast<std::size_t>(v)])
            continue;
        in[static_cast<std::size_t>(v)] = 1;
        sum += vertex_potential(instance.capacity(v), instance.params());
    }
    int edges = 0;
    for (const auto &e : g.edges())
        if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)])
            ++edges;
    return sum - (instance.params().i + 1) * edges;
}

int total_potential(const WeightedInstance &instance) {
    int sum = 0;
    for (const auto &c : instance.capacities())
        sum += vertex_potential(c, instance.params());
    return sum - (instance.params().i + 1) * instance.graph().edge_count();
}

bool subset_precedes(VertexMask a, VertexMask b) {
    int sa = std::popcount(a), sb = std::popcount(b);
    if (sa != sb)
        return sa < sb;
    VertexMask diff = a ^ b;
    if (diff == 0)
        return false;
    return (a & (diff & (~diff + 1))) != 0;
}

PotentialReport min_potential_subset(const WeightedInstance &instance, SubsetMode mode, int max_vertices,
                                     unsigned workers) {
    const auto &g = instance.graph();
    check_ceiling(g, max_vertices);
    const int n = g.vertex_count();
    if (n == 0 || (mode == SubsetMode::NonemptyProper && n == 1))
        throw std::invalid_argument("no subset in the requested family");

    const VertexMask full = (VertexMask{1} << n) - 1;
    const int edge_weight = instance.params().i + 1;
    std::vector<int> rho(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        rho[static_cast<std::size_t>(v)] = vertex_potential(instance.capacity(v), instance.params());

    struct Best {
        bool set = false;
        VertexMask mask = 0;
        long long value = 0;
    };
    std::vector<Best> best(resolve_workers(workers));
    scan_subsets(adjacency_masks(g), rho, workers,
                 [&](unsigned w, VertexMask mask, int, int edges, long long wsum) {
                     if (mask == 0 || (mode == SubsetMode::NonemptyProper && mask == full))
                         return;
                     long long value = wsum - static_cast<long long>(edge_weight) * edges;
                     auto &b = best[w];
                     if (!b.set || value < b.value || (value == b.value && subset_precedes(mask, b.mask)))
                         b = {true, mask, value};
                 });

    Best overall;
    for (const auto &b : best)
        if (b.set && (!overall.set || b.value < overall.value ||
                      (b.value == overall.value && subset_precedes(b.mask, overall.mask))))
            overall = b;
    return PotentialReport{overall.mask, static_cast<int>(overall.value), mode, overall.mask == full};
}

int check_submodularity(const WeightedInstance &instance, VertexMask a, VertexMask b) {
    const auto &g = instance.graph();
    check_mask(g, a);
    check_mask(g, b);
    VertexMask a_only = a & ~b;
    VertexMask b_only = b & ~a;
    int crossing = 0;
    for (const auto &e : g.edges()) {
        bool forward = ((a_only >> e.u) & 1U) && ((b_only >> e.v) & 1U);
        bool backward = ((b_only >> e.u) & 1U) && ((a_only >> e.v) & 1U);
        if (forward || backward)
            ++crossing;
    }
    int lhs = subset_potential(instance, a) + subset_potential(instance, b);
    int rhs = subset_potential(instance, a | b) + subset_potential(instance, a & b) +
              (instance.params().i + 1) * crossing;
    return lhs - rhs;
}

SparsityResult sparsity_test(const SimpleGraph &g, const DefectParams &params, int max_vertices,
                             unsigned workers) {
    validate(params);
    check_ceiling(g, max_vertices);
    const int n = g.vertex_count();
    const long long slope = 2LL * params.i + 1;
    const long long edge_weight = params.i + 1;
    const long long offset = params.j - params.i;

    struct Worst {
        bool set = false;
        VertexMask mask = 0;
        long long excess = 0;
    };
    std::vector<Worst> worst(resolve_workers(workers));
    std::vector<int> unit(static_cast<std::size_t>(n), 1);
    scan_subsets(adjacency_masks(g), unit, workers, [&](unsigned w, VertexMask mask, int size, int edges, long long) {
        if (mask == 0)
            return;
        long long excess = edge_weight * edges - (slope * size + offset);
        auto &x = worst[w];
        if (!x.set || excess > x.excess || (excess == x.excess && subset_precedes(mask, x.mask)))
            x = {true, mask, excess};
    });

    Worst overall;
    for (const auto &x : worst)
        if (x.set && (!overall.set || x.excess > overall.excess ||
                      (x.excess == overall.excess && subset_precedes(x.mask, overall.mask))))
            overall = x;
    SparsityResult out;
    if (overall.set && overall.excess > 0) {
        out.sparse = false;
        out.witness = overall.mask;
        out.excess = static_cast<int>(overall.excess);
    }
    return out;
}

} // namespace dpc
