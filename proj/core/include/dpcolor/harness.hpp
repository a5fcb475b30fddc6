#pragma once

// Top-level workflows: criticality certification, exhaustive search for
// small critical pairs, and the construction sharpness suite.

#include <dpcolor/constructions.hpp>
#include <dpcolor/model.hpp>
#include <dpcolor/solver.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dpc {

enum class StrategyKind { Exhaustive, Reduced, Sampled };

struct Strategy {
    StrategyKind kind = StrategyKind::Exhaustive;
    std::optional<ConstructionSpec> spec; ///< Reduced only
    std::uint64_t count = 0;              ///< Sampled only
    std::uint64_t seed = 0;               ///< Sampled only

    static Strategy exhaustive() { return {}; }
    static Strategy reduced(ConstructionSpec spec) { return {StrategyKind::Reduced, std::move(spec), 0, 0}; }
    static Strategy sampled(std::uint64_t count, std::uint64_t seed) {
        return {StrategyKind::Sampled, std::nullopt, count, seed};
    }
    bool certifying() const { return kind != StrategyKind::Sampled; }
};

std::string to_string(StrategyKind kind);

/// Unrefuted is the sampled-strategy outcome where every check passed; only
/// exhaustive and reduced runs can certify Critical.
enum class Criticality { Critical, Colorable, NotCritical, Unrefuted };

std::string to_string(Criticality c);

/// A proper subgraph found not colorable: G - e or G - v.
struct FailingSubgraph {
    std::optional<Edge> removed_edge;
    std::optional<Vertex> removed_vertex;
    CoverSigning witness; ///< signing of the subgraph
};

struct DeletionCheck {
    EdgeIndex representative;
    std::vector<EdgeIndex> orbit;
    AllCoversResult result;
};

struct WorkCounters {
    std::uint64_t signings = 0;
    std::uint64_t classes = 0;
    std::uint64_t nodes_expanded = 0;

    void add(const AllCoversResult &r) {
        signings += r.signings_examined;
        classes += r.classes_examined;
        nodes_expanded += r.nodes_expanded;
    }
};

struct CriticalityVerdict {
    Criticality verdict = Criticality::Colorable;
    bool certifying = true;
    std::optional<CoverSigning> witness; ///< cover of G with no valid map
    std::optional<FailingSubgraph> failure;
    std::vector<DeletionCheck> deletions;
    std::vector<Vertex> isolated_checked;
    int potential = 0; ///< rho(G, c)
    WorkCounters counters;
};

/// Not colorable for some cover, and every G - e (one edge per orbit when
/// the strategy supplies symmetries) and every G - v for isolated v is
/// colorable for all covers. Edge deletions cover every proper subgraph
/// with an edge removed since colorability is inherited by subgraphs.
/// Throws std::invalid_argument for an infeasible strategy.
CriticalityVerdict is_critical(const WeightedInstance &instance, const Strategy &strategy = Strategy::exhaustive(),
                               const CoverSearchOptions &options = {});

// ---------------------------------------------------------------------------

/// All simple graphs on n vertices up to isomorphism (n <= 7), each in
/// canonical labelling: the edge set that is lexicographically least over
/// the relabellings that list vertices by nonincreasing degree.
std::vector<SimpleGraph> nonisomorphic_graphs(int n);

struct CriticalPair {
    WeightedInstance instance;
    CoverSigning witness;
    int potential = 0;
};

struct EnumerationOptions {
    bool weighted = false; ///< every capacity function, else only c = (i, j)
    unsigned workers = 0;
    int max_vertices = 6;
};

struct EnumerationReport {
    DefectParams params;
    int n = 0;
    bool weighted = false;
    std::uint64_t graphs_examined = 0;
    std::uint64_t pairs_examined = 0;
    std::vector<CriticalPair> critical;
    /// Least edge count among critical pairs with c = (i, j).
    std::optional<int> min_edges;
    /// ceil(((2i+1)n + j - i + 1) / (i+1)); the lower bound on edges of an
    /// n-vertex critical graph with c = (i, j), stated for i in {1, 2}, j >= 2i.
    int edge_bound = 0;
    bool bound_applicable = false; ///< i in {1, 2} and j >= 2i
    int bound_violations = 0;     ///< uniform-capacity critical graphs below edge_bound
    /// Critical pairs with rho(G, c) > i - j - 1; counted under the same
    /// hypotheses as the edge bound.
    int potential_violations = 0;

    bool consistent() const { return bound_violations == 0 && potential_violations == 0; }
};

EnumerationReport enumerate_critical(const DefectParams &params, int n, const EnumerationOptions &options = {});

// ---------------------------------------------------------------------------

struct SharpnessEntry {
    DefectParams params;
    int m = 0;
    CountReport counts;
    bool hm_colorable = true;
    std::uint64_t hm_nodes = 0;
    std::optional<CriticalityVerdict> criticality;

    bool passed() const {
        return counts.ok() && !hm_colorable &&
               (!criticality || criticality->verdict == Criticality::Critical);
    }
};

struct SharpnessReport {
    std::vector<SharpnessEntry> entries;
    bool passed() const {
        for (const auto &e : entries)
            if (!e.passed())
                return false;
        return true;
    }
};

struct SuiteOptions {
    bool criticality = false; ///< also run is_critical with the reduced strategy
    CoverSearchOptions search;
};

SharpnessReport verify_sharpness_suite(const std::vector<DefectParams> &pairs, const std::vector<int> &ms,
                                       const SuiteOptions &options = {});

} // namespace dpc
