#include "support.hpp"

#include <dpcolor/harness.hpp>
#include <dpcolor/potential.hpp>

#include <doctest.h>

#include <set>

using namespace dpc;

namespace {

/// Critical by definition: not colorable for some signing, and every proper
/// subgraph obtained by deleting any nonempty vertex set or edge set is
/// colorable for every signing. Checks all spanning edge subsets and all
/// vertex deletions, each with brute force over maps.
bool critical_by_definition(const WeightedInstance &inst) {
    auto colorable = [](const WeightedInstance &w) {
        return test::colorable_every_signing(w, [](const WeightedInstance &x, const CoverSigning &s) {
            return brute_force_oracle(x, s).has_value();
        });
    };
    if (colorable(inst))
        return false;
    const auto &g = inst.graph();
    const int m = g.edge_count();
    for (std::uint64_t keep = 0; keep + 1 < (std::uint64_t{1} << m); ++keep) {
        std::vector<Edge> edges;
        for (int e = 0; e < m; ++e)
            if ((keep >> e) & 1U)
                edges.push_back(g.edge(e));
        if (!colorable(WeightedInstance(SimpleGraph(g.vertex_count(), edges), inst.params(), inst.capacities())))
            return false;
    }
    for (Vertex v = 0; v < g.vertex_count() && g.vertex_count() > 1; ++v)
        if (!colorable(inst.without_vertex(v)))
            return false;
    return true;
}

std::set<std::vector<Edge>> edge_sets(const std::vector<SimpleGraph> &graphs) {
    std::set<std::vector<Edge>> out;
    for (const auto &g : graphs)
        out.insert(g.edges());
    return out;
}

} // namespace

TEST_CASE("criticality examples") {
    WeightedInstance lone(SimpleGraph(1), {1, 2}, {{-1, -1}});
    auto v = is_critical(lone);
    CHECK(v.verdict == Criticality::Critical);
    CHECK(v.potential == -2);

    auto k2 = is_critical(WeightedInstance(SimpleGraph(2, {{0, 1}}), {0, 0}));
    CHECK(k2.verdict == Criticality::Colorable);

    // a triangle with proper colouring required is critical
    WeightedInstance tri(SimpleGraph(3, {{0, 1}, {1, 2}, {0, 2}}), {0, 0});
    auto t = is_critical(tri);
    CHECK(t.verdict == Criticality::Critical);
    CHECK(t.deletions.size() == 3);

    // with a pendant edge added it is no longer critical
    WeightedInstance tail(SimpleGraph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}), {0, 0});
    auto nt = is_critical(tail);
    CHECK(nt.verdict == Criticality::NotCritical);
    REQUIRE(nt.failure.has_value());
    CHECK(nt.failure->removed_edge == Edge(2, 3));

    // isolated vertex next to a critical component
    WeightedInstance split(SimpleGraph(4, {{0, 1}, {1, 2}, {0, 2}}), {0, 0});
    auto s = is_critical(split);
    CHECK(s.verdict == Criticality::NotCritical);
    REQUIRE(s.failure.has_value());
    CHECK(s.failure->removed_vertex == 3);

    auto sampled = is_critical(tri, Strategy::sampled(200, 1));
    CHECK(sampled.verdict == Criticality::Unrefuted);
    CHECK_FALSE(sampled.certifying);
    CHECK_THROWS_AS(is_critical(tri, Strategy::sampled(0, 1)), std::invalid_argument);
    CoverSearchOptions tight;
    tight.max_edges = 2;
    CHECK_THROWS_AS(is_critical(tri, Strategy::exhaustive(), tight), std::invalid_argument);
}

TEST_CASE("criticality agrees with the definition on small instances") {
    test::Rng rng(77);
    int critical = 0;
    for (int round = 0; round < 400; ++round) {
        auto params = test::random_params(rng, 1, 2);
        int n = test::uniform(rng, 1, 4);
        auto g = test::random_graph(rng, n, 0.7);
        WeightedInstance inst(g, params, test::random_caps(rng, n, params));
        bool expected = critical_by_definition(inst);
        auto got = is_critical(inst, Strategy::exhaustive(), {1, 24});
        REQUIRE((got.verdict == Criticality::Critical) == expected);
        critical += expected;
    }
    CHECK(critical > 10);
}

TEST_CASE("G_1 is critical under the reduced strategy") {
    auto [g, spec] = make_gm({1, 2}, 1);
    auto inst = gm_instance(g, spec);
    auto v = is_critical(inst, Strategy::reduced(spec));
    CHECK(v.verdict == Criticality::Critical);
    CHECK(v.potential == -2);
    CHECK(v.deletions.size() == 3);
    REQUIRE(v.witness.has_value());
    CHECK_FALSE(find_coloring(inst, *v.witness).has_value());
    for (const auto &d : v.deletions) {
        CHECK(d.result.colorable());
        CHECK(d.result.signings_examined == (std::uint64_t{1} << 24));
    }
}

TEST_CASE("nonisomorphic graph counts") {
    const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
    for (int n = 0; n <= 6; ++n) {
        auto graphs = nonisomorphic_graphs(n);
        CHECK(graphs.size() == expected[static_cast<std::size_t>(n)]);
        CHECK(edge_sets(graphs).size() == graphs.size());
    }
    CHECK_THROWS_AS(nonisomorphic_graphs(8), std::length_error);
}

TEST_CASE("nonisomorphic graphs cover every labelled graph on 4 vertices") {
    // degree sequences separate the 11 graphs on 4 vertices
    auto signature = [](const SimpleGraph &g) {
        std::vector<int> d;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    std::set<std::vector<int>> reps;
    for (const auto &g : nonisomorphic_graphs(4))
        reps.insert(signature(g));
    CHECK(reps.size() == 11);
    for (std::uint32_t code = 0; code < 64; ++code) {
        std::vector<Edge> edges;
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit)
                if ((code >> bit) & 1U)
                    edges.emplace_back(u, v);
        CHECK(reps.count(signature(SimpleGraph(4, edges))) == 1);
    }
}

TEST_CASE("enumeration examples") {
    auto r3 = enumerate_critical({1, 2}, 3);
    CHECK(r3.consistent());
    CHECK(r3.critical.empty());
    CHECK(r3.edge_bound == 6);

    auto r01 = enumerate_critical({0, 1}, 3, {true, 1, 6});
    CHECK(r01.consistent());
    CHECK(r01.pairs_examined == 4 * 6 * 6 * 6);
    auto again = enumerate_critical({0, 1}, 3, {true, 2, 6});
    REQUIRE(again.critical.size() == r01.critical.size());
    for (std::size_t k = 0; k < again.critical.size(); ++k)
        CHECK(again.critical[k].instance == r01.critical[k].instance);

    auto weighted = enumerate_critical({1, 2}, 3, {true, 0, 6});
    CHECK(weighted.potential_violations == 0);
    CHECK_FALSE(weighted.critical.empty());
    for (const auto &c : weighted.critical)
        CHECK(c.potential <= -2);
    CHECK_THROWS_AS(enumerate_critical({1, 2}, 7), std::length_error);
}

TEST_CASE("sharpness suite") {
    auto r = verify_sharpness_suite({{1, 2}, {1, 3}, {2, 4}}, {1, 2});
    CHECK(r.entries.size() == 6);
    CHECK(r.passed());
    for (const auto &e : r.entries) {
        CHECK(e.counts.ok());
        CHECK_FALSE(e.hm_colorable);
    }
}
