#pragma once

// Shared helpers for the test suites: seeded random instances and small
// independent reference computations.

#include <dpcolor/model.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace dpc::test {

using Rng = std::mt19937_64;

inline int uniform(Rng &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline SimpleGraph random_graph(Rng &rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return SimpleGraph(n, std::move(edges));
}

inline CapacityFunction random_caps(Rng &rng, int n, const DefectParams &p) {
    CapacityFunction caps;
    for (int v = 0; v < n; ++v)
        caps.push_back({uniform(rng, -1, p.i), uniform(rng, -1, p.j)});
    return caps;
}

inline DefectParams random_params(Rng &rng, int max_i = 2, int max_gap = 3) {
    int i = uniform(rng, 0, max_i);
    return {i, i + uniform(rng, 0, max_gap)};
}

inline WeightedInstance random_instance(Rng &rng, int min_n, int max_n) {
    auto params = random_params(rng);
    int n = uniform(rng, min_n, max_n);
    double p = std::uniform_real_distribution<double>(0.15, 0.8)(rng);
    return WeightedInstance(random_graph(rng, n, p), params, random_caps(rng, n, params));
}

inline CoverSigning random_signing(Rng &rng, int edges) {
    std::vector<Sign> signs;
    for (int e = 0; e < edges; ++e)
        signs.push_back(uniform(rng, 0, 1) ? Sign::Twisted : Sign::Parallel);
    return CoverSigning(std::move(signs));
}

/// |E(G[S])| by checking every pair of S against the edge list.
inline int induced_edges_naive(const SimpleGraph &g, const std::vector<Vertex> &s) {
    int count = 0;
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            for (const auto &e : g.edges())
                if (e == Edge(s[a], s[b]))
                    ++count;
    return count;
}

/// rho(S) straight from its definition.
inline int potential_naive(const WeightedInstance &inst, const std::vector<Vertex> &s) {
    const auto &p = inst.params();
    int sum = 0;
    for (Vertex v : s)
        sum += p.i - p.j + 1 + inst.capacity(v).poor + inst.capacity(v).rich;
    return sum - (p.i + 1) * induced_edges_naive(inst.graph(), s);
}

inline std::vector<Vertex> bits_to_vertices(std::uint64_t bits, int n) {
    std::vector<Vertex> out;
    for (int v = 0; v < n; ++v)
        if ((bits >> v) & 1U)
            out.push_back(v);
    return out;
}

/// Colorable for every one of the 2^|E| signings, via the given decision
/// procedure on each signing.
template <class Decide>
bool colorable_every_signing(const WeightedInstance &inst, Decide decide) {
    const int m = inst.graph().edge_count();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        std::vector<Sign> signs;
        for (int e = 0; e < m; ++e)
            signs.push_back(((bits >> e) & 1U) ? Sign::Twisted : Sign::Parallel);
        if (!decide(inst, CoverSigning(signs)))
            return false;
    }
    return true;
}

} // namespace dpc::test
