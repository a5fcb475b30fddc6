#include "support.hpp"

#include <dpcolor/constructions.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace dpc;

namespace {

/// Orbit count of the 2^(2i+3) flag signings under permutations of the
/// middles, by Burnside: a permutation with k cycles fixes 2 * 4^k signings.
std::uint64_t burnside_flag_classes(int i) {
    std::vector<int> perm(static_cast<std::size_t>(i + 1));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t fixed = 0, group = 0;
    do {
        std::vector<char> seen(perm.size(), 0);
        int cycles = 0;
        for (std::size_t s = 0; s < perm.size(); ++s) {
            if (seen[s])
                continue;
            ++cycles;
            for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(perm[t]))
                seen[t] = 1;
        }
        std::uint64_t f = 2;
        for (int c = 0; c < cycles; ++c)
            f *= 4;
        fixed += f;
        ++group;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return fixed / group;
}

/// Least defect forced on the base over every completion of the flag with
/// the top and middles valid, by trying all 2^(i+2) completions.
int forced_base_defect(const DefectParams &p, const FlagSigning &f, Node base) {
    const int k = p.i + 1;
    int best = -1;
    for (int bits = 0; bits < (1 << (k + 1)); ++bits) {
        Node top = (bits & 1) ? Node::Rich : Node::Poor;
        int top_defect = nodes_adjacent(base, top, f.base_top) ? 1 : 0;
        int base_defect = top_defect;
        bool ok = true;
        for (int u = 0; u < k; ++u) {
            Node mid = ((bits >> (u + 1)) & 1) ? Node::Rich : Node::Poor;
            bool with_base = nodes_adjacent(base, mid, f.middles[static_cast<std::size_t>(u)].first);
            bool with_top = nodes_adjacent(top, mid, f.middles[static_cast<std::size_t>(u)].second);
            base_defect += with_base;
            top_defect += with_top;
            int mid_defect = int(with_base) + int(with_top);
            if (mid_defect > (mid == Node::Poor ? p.i : p.j))
                ok = false;
        }
        if (top_defect > (top == Node::Poor ? p.i : p.j))
            ok = false;
        if (ok && (best < 0 || base_defect < best))
            best = base_defect;
    }
    return best;
}

/// Small host for checking the reduced enumeration against the full one:
/// base 0 with two flags, base 1 with one flag, path edge 0-1 (i = 1).
std::pair<SimpleGraph, ConstructionSpec> small_host() {
    ConstructionSpec spec;
    spec.params = {1, 2};
    spec.m = 2;
    GraphBuilder b(2);
    spec.path = {0, 1};
    b.add_edge(0, 1);
    spec.flags_at.resize(2);
    for (Vertex base : {0, 0, 1}) {
        spec.flags_at[static_cast<std::size_t>(base)].push_back(static_cast<int>(spec.flags.size()));
        spec.flags.push_back(make_flag(b, base, spec.params));
    }
    return {b.build(), spec};
}

} // namespace

TEST_CASE("flag sizes") {
    for (int i : {1, 2}) {
        GraphBuilder b(1);
        auto f = make_flag(b, 0, {i, 2 * i});
        CHECK(b.vertex_count() == 1 + i + 2);
        CHECK(b.edge_count() == 2 * i + 3);
        CHECK(static_cast<int>(f.middles.size()) == i + 1);
        make_flag(b, 0, {i, 2 * i});
        CHECK(b.build().degree(0) == 2 * (i + 2));
    }
}

TEST_CASE("construction counts") {
    auto check = [](DefectParams p, int m, int v, int e) {
        auto [g, spec] = make_gm(p, m);
        CHECK(g.vertex_count() == v);
        CHECK(g.edge_count() == e);
        CHECK((p.i + 1) * e == (2 * p.i + 1) * v + p.j - p.i + 1);
        CHECK(verify_counts(p, m).ok());
    };
    check({1, 2}, 1, 16, 25);
    check({1, 2}, 2, 20, 31);
    check({2, 4}, 1, 33, 56);
    CHECK(verify_counts({2, 5}, 3).ok());
    CHECK(verify_counts({1, 3}, 2).ok());
    CHECK_THROWS(make_gm({0, 2}, 1));
    CHECK_THROWS(make_gm({1, 1}, 1));
    CHECK_THROWS(make_gm({1, 2}, 0));
}

TEST_CASE("construction layout") {
    auto [g, spec] = make_gm({1, 2}, 3);
    REQUIRE(spec.path.size() == 3);
    CHECK(spec.flags_at[0].size() == 2);
    CHECK(spec.flags_at[1].size() == 1);
    CHECK(spec.flags_at[2].size() == 4);
    CHECK(spec.path == std::vector<Vertex>{0, 1, 2});
    CHECK(spec.flags[0].top == 3);
    CHECK(spec.flags[0].middles == std::vector<Vertex>{4, 5});
    for (const auto &f : spec.flags) {
        CHECK(g.adjacent(f.base, f.top));
        for (Vertex u : f.middles) {
            CHECK(g.degree(u) == 2);
            CHECK(g.adjacent(u, f.base));
            CHECK(g.adjacent(u, f.top));
        }
    }
    auto [g1, spec1] = make_gm({1, 2}, 1);
    CHECK(spec1.flags_at[0].size() == 5);
}

TEST_CASE("bad covers are not colorable") {
    for (auto [p, m] : std::vector<std::pair<DefectParams, int>>{{{1, 2}, 1}, {{1, 2}, 2}, {{1, 2}, 3}, {{1, 3}, 1}}) {
        auto [g, spec] = make_gm(p, m);
        auto inst = gm_instance(g, spec);
        auto h = make_hm(g, spec);
        CHECK_FALSE(find_coloring(inst, h).has_value());
    }
    auto [g, spec] = make_gm({1, 2}, 1);
    CHECK_FALSE(brute_force_oracle(gm_instance(g, spec), make_hm(g, spec)).has_value());
}

TEST_CASE("bad cover layout") {
    auto [g, spec] = make_gm({1, 2}, 1);
    auto h = make_hm(g, spec);
    int twisted = 0, parallel = 0;
    for (const auto &f : spec.flags) {
        auto fs = read_flag(g, f, h);
        twisted += fs == twisted_flag(1);
        parallel += fs == parallel_flag(1);
    }
    CHECK(twisted == 2);
    CHECK(parallel == 3);

    auto [g2, spec2] = make_gm({1, 2}, 2);
    auto h2 = make_hm(g2, spec2);
    CHECK(h2[*g2.edge_index(0, 1)] == Sign::Parallel);
}

TEST_CASE("an all-twisted path gives a colorable cover") {
    for (auto [p, m] : std::vector<std::pair<DefectParams, int>>{{{1, 2}, 2}, {{1, 2}, 3}, {{1, 3}, 2}}) {
        auto [g, spec] = make_gm(p, m);
        auto h = make_hm(g, spec);
        for (std::size_t k = 0; k + 1 < spec.path.size(); ++k)
            h[*g.edge_index(spec.path[k], spec.path[k + 1])] = Sign::Twisted;
        CHECK(find_coloring(gm_instance(g, spec), h).has_value());
    }
}

TEST_CASE("flag sign classes") {
    CHECK(burnside_flag_classes(1) == 20);
    CHECK(burnside_flag_classes(2) == 40);
    for (int i : {1, 2, 3}) {
        DefectParams p{i, 2 * i};
        auto classes = flag_sign_classes(p);
        CHECK(classes.size() == burnside_flag_classes(i));
        CHECK(std::is_sorted(classes.begin(), classes.end()));
        CHECK(classes.front() == parallel_flag(i));
        CHECK(canonical_flag(parallel_flag(i)) == parallel_flag(i));
        std::uint64_t total = 0;
        for (const auto &c : classes) {
            CHECK(canonical_flag(c) == c);
            total += flag_orbit_size(c);
        }
        CHECK(total == (std::uint64_t{1} << (2 * i + 3)));
    }
}

TEST_CASE("flag read and write round-trip") {
    auto [g, spec] = make_gm({2, 4}, 1);
    test::Rng rng(6);
    auto s = test::random_signing(rng, g.edge_count());
    for (const auto &f : spec.flags) {
        auto fs = read_flag(g, f, s);
        CoverSigning t = CoverSigning::all(g.edge_count(), Sign::Parallel);
        write_flag(g, f, fs, t);
        CHECK(read_flag(g, f, t) == fs);
    }
}

TEST_CASE("flag effects match completion search") {
    for (int i : {1, 2}) {
        DefectParams p{i, 2 * i};
        for (const auto &f : flag_sign_classes(p)) {
            auto e = flag_effect(p, f);
            CHECK(e.poor_base == forced_base_defect(p, f, Node::Poor));
            CHECK(e.rich_base == forced_base_defect(p, f, Node::Rich));
        }
        CHECK(flag_effect(p, parallel_flag(i)).rich_base == 1);
        CHECK(flag_effect(p, twisted_flag(i)).poor_base == 1);
    }
}

TEST_CASE("reduced enumeration weights cover every signing") {
    auto [g, spec] = make_gm({1, 2}, 1);
    auto inst = gm_instance(g, spec);
    ReducedCoverSource source(inst, spec);
    CHECK(source.size() == 42504);
    std::uint64_t total = 0;
    for (std::uint64_t k = 0; k < source.size(); ++k)
        total += source.weight(k);
    CHECK(total == (std::uint64_t{1} << 25));
    CoverSigning s;
    for (std::uint64_t k = 0; k < source.size(); k += 997) {
        source.fill(k, s);
        CHECK(source.class_index(s) == k);
    }
    // class membership is invariant under swapping two flags at one base
    auto h = make_hm(g, spec);
    auto swapped = h;
    auto f0 = read_flag(g, spec.flags[0], h);
    auto f4 = read_flag(g, spec.flags[4], h);
    write_flag(g, spec.flags[0], f4, swapped);
    write_flag(g, spec.flags[4], f0, swapped);
    CHECK(source.class_index(h) == source.class_index(swapped));

    auto orbits = edge_orbits(g, spec);
    REQUIRE(orbits.size() == 3);
    std::size_t members = 0;
    for (const auto &o : orbits) {
        members += o.members.size();
        ReducedCoverSource damaged(inst, spec, o.representative);
        std::uint64_t w = 0;
        for (std::uint64_t k = 0; k < damaged.size(); ++k)
            w += damaged.weight(k);
        CHECK(w == (std::uint64_t{1} << 24));
    }
    CHECK(members == 25);
}

TEST_CASE("reduced enumeration agrees with full enumeration on a small host") {
    auto [g, spec] = small_host();
    REQUIRE(g.edge_count() == 16);
    test::Rng rng(21);
    const DefectParams p = spec.params;
    int witnesses = 0;
    for (int round = 0; round < 24; ++round) {
        // capacities constant on tops and on middles of each base
        CapacityFunction caps(static_cast<std::size_t>(g.vertex_count()));
        for (Vertex base : spec.path) {
            caps[static_cast<std::size_t>(base)] = {test::uniform(rng, -1, p.i), test::uniform(rng, -1, p.j)};
            Capacity top{test::uniform(rng, 0, p.i), test::uniform(rng, 0, p.j)};
            Capacity mid{test::uniform(rng, 0, p.i), test::uniform(rng, 0, p.j)};
            for (int idx : spec.flags_at[static_cast<std::size_t>(base)]) {
                const auto &f = spec.flags[static_cast<std::size_t>(idx)];
                caps[static_cast<std::size_t>(f.top)] = top;
                for (Vertex u : f.middles)
                    caps[static_cast<std::size_t>(u)] = mid;
            }
        }
        WeightedInstance inst(g, p, caps);
        std::vector<std::optional<EdgeIndex>> deletions{std::nullopt};
        for (EdgeIndex e = 0; e < g.edge_count(); e += 5)
            deletions.emplace_back(e);
        for (auto deleted : deletions) {
            ReducedCoverSource reduced(inst, spec, deleted);
            auto a = search_covers(reduced.host(), reduced, {1, 24});
            auto b = colorable_all_covers(reduced.host(), {1, 24});
            REQUIRE(a.colorable() == b.colorable());
            if (!a.colorable()) {
                ++witnesses;
                CHECK_FALSE(find_coloring(reduced.host(), *a.witness).has_value());
            } else {
                CHECK(a.signings_examined == b.signings_examined);
            }
        }
    }
    CHECK(witnesses > 0);
}

TEST_CASE("reduced enumeration rejects asymmetric capacities") {
    auto [g, spec] = make_gm({1, 2}, 1);
    auto inst = gm_instance(g, spec).with_capacity(spec.flags[0].top, {0, 2});
    CHECK_THROWS_AS(ReducedCoverSource(inst, spec), std::invalid_argument);
}
