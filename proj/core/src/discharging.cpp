#include <dpcolor/discharging.hpp>
#include <dpcolor/potential.hpp>

namespace dpc {

std::vector<VertexClass> classify_vertices(const WeightedInstance &instance) {
    const auto &g = instance.graph();
    const Capacity full{instance.params().i, instance.params().j};
    std::vector<VertexClass> out(static_cast<std::size_t>(g.vertex_count()), VertexClass::Ordinary);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 2 && instance.capacity(v) == full)
            out[static_cast<std::size_t>(v)] = VertexClass::Surplus;
    return out;
}

ChargeLedger charges(const WeightedInstance &instance) {
    const auto &g = instance.graph();
    const int i = instance.params().i;
    const auto n = static_cast<std::size_t>(g.vertex_count());

    ChargeLedger ledger;
    ledger.classes = classify_vertices(instance);
    ledger.ordinary_neighbors.assign(n, 0);
    ledger.surplus_neighbors.assign(n, 0);
    ledger.doubled_charge.assign(n, 0);

    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto k = static_cast<std::size_t>(v);
        for (const auto &inc : g.incidences(v)) {
            if (ledger.classes[static_cast<std::size_t>(inc.neighbor)] == VertexClass::Surplus)
                ++ledger.surplus_neighbors[k];
            else
                ++ledger.ordinary_neighbors[k];
        }
        if (ledger.classes[k] == VertexClass::Surplus)
            continue;
        ledger.doubled_charge[k] = 2 * vertex_potential(instance.capacity(v), instance.params()) -
                                   (i + 1) * ledger.ordinary_neighbors[k] - ledger.surplus_neighbors[k];
        ledger.doubled_total += ledger.doubled_charge[k];
    }
    return ledger;
}

ChargeIdentity verify_total_charge(const WeightedInstance &instance) {
    auto ledger = charges(instance);
    ChargeIdentity out;
    out.doubled_residual = ledger.doubled_total - 2 * total_potential(instance);
    for (const auto &e : instance.graph().edges())
        if (ledger.classes[static_cast<std::size_t>(e.u)] == VertexClass::Surplus &&
            ledger.classes[static_cast<std::size_t>(e.v)] == VertexClass::Surplus)
            out.surplus_adjacencies.push_back(e);
    return out;
}

} // namespace dpc
