#pragma once

// Discharging on a weighted pair. Initial charge rho_c(v) on vertices and
// -(i+1) on edges; each edge then splits its charge between its ends, and
// each surplus vertex (degree 2, capacity (i, j)) passes i/2 to each
// neighbour. All charges are kept doubled so they stay integral.

#include <dpcolor/model.hpp>

#include <vector>

namespace dpc {

enum class VertexClass { Ordinary, Surplus };

std::vector<VertexClass> classify_vertices(const WeightedInstance &instance);

struct ChargeLedger {
    std::vector<VertexClass> classes;
    std::vector<int> ordinary_neighbors; ///< d1(v)
    std::vector<int> surplus_neighbors;  ///< d2(v)
    std::vector<int> doubled_charge;     ///< 2 ch(v)
    int doubled_total = 0;
};

/// Closed form: surplus vertices end at 0; an ordinary v ends at
/// rho_c(v) - (i+1)/2 d1(v) - 1/2 d2(v).
ChargeLedger charges(const WeightedInstance &instance);

struct ChargeIdentity {
    /// 2 sum ch(v) - 2 rho(G, c).
    int doubled_residual = 0;
    /// Edges joining two surplus vertices. The redistribution is only
    /// defined when this is empty; otherwise the residual is reported as is.
    std::vector<Edge> surplus_adjacencies;

    bool holds() const { return doubled_residual == 0; }
};

ChargeIdentity verify_total_charge(const WeightedInstance &instance);

} // namespace dpc
