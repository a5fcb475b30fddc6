#include <dpcolor/constructions.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace dpc {

namespace {

void check_construction_params(const DefectParams &params) {
    if (params.i < 1 || params.j < 2 * params.i)
        throw ModelError("constructions need i >= 1 and j >= 2i (got i=" + std::to_string(params.i) +
                         " j=" + std::to_string(params.j) + ")");
}

std::vector<int> flags_per_base(const DefectParams &params, int m) {
    if (m == 1)
        return {params.i + params.j + 2};
    std::vector<int> counts(static_cast<std::size_t>(m), params.i);
    counts.front() = params.i + 1;
    counts.back() = params.i + params.j + 1;
    return counts;
}

EdgeIndex require_edge(const SimpleGraph &g, Vertex u, Vertex v) {
    auto e = g.edge_index(u, v);
    if (!e)
        throw ModelError("construction spec mismatch: missing edge " + std::to_string(u) + "-" + std::to_string(v));
    return *e;
}

std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int t = 2; t <= k; ++t)
        f *= static_cast<std::uint64_t>(t);
    return f;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t t = 1; t <= k; ++t)
        r = r * (n - k + t) / t;
    return r;
}

/// Nondecreasing sequences of length r over c symbols.
std::uint64_t multichoose(std::uint64_t c, std::uint64_t r) {
    if (r == 0)
        return 1;
    if (c == 0)
        return 0;
    return binomial(c + r - 1, r);
}

int pair_code(const std::pair<Sign, Sign> &p) {
    return (static_cast<int>(p.first) << 1) | static_cast<int>(p.second);
}

} // namespace

FlagSpec make_flag(GraphBuilder &builder, Vertex base, const DefectParams &params) {
    if (base < 0 || base >= builder.vertex_count())
        throw ModelError("flag base " + std::to_string(base) + " does not exist");
    FlagSpec flag{base, builder.add_vertex(), {}};
    builder.add_edge(base, flag.top);
    for (int k = 0; k <= params.i; ++k) {
        Vertex u = builder.add_vertex();
        builder.add_edge(base, u);
        builder.add_edge(flag.top, u);
        flag.middles.push_back(u);
    }
    return flag;
}

std::pair<SimpleGraph, ConstructionSpec> make_gm(const DefectParams &params, int m) {
    check_construction_params(params);
    if (m < 1)
        throw ModelError("m must be at least 1");

    ConstructionSpec spec;
    spec.params = params;
    spec.m = m;
    GraphBuilder builder;
    for (int k = 0; k < m; ++k)
        spec.path.push_back(builder.add_vertex());
    for (int k = 0; k + 1 < m; ++k)
        builder.add_edge(spec.path[static_cast<std::size_t>(k)], spec.path[static_cast<std::size_t>(k) + 1]);

    auto counts = flags_per_base(params, m);
    spec.flags_at.resize(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        for (int t = 0; t < counts[static_cast<std::size_t>(k)]; ++t) {
            spec.flags_at[static_cast<std::size_t>(k)].push_back(static_cast<int>(spec.flags.size()));
            spec.flags.push_back(make_flag(builder, spec.path[static_cast<std::size_t>(k)], params));
        }
    }
    return {builder.build(), std::move(spec)};
}

WeightedInstance gm_instance(const SimpleGraph &g, const ConstructionSpec &spec) {
    return WeightedInstance(g, spec.params);
}

FlagSigning parallel_flag(int i) {
    return FlagSigning{Sign::Parallel,
                       std::vector<std::pair<Sign, Sign>>(static_cast<std::size_t>(i + 1),
                                                          {Sign::Parallel, Sign::Parallel})};
}

FlagSigning twisted_flag(int i) {
    return FlagSigning{Sign::Twisted,
                       std::vector<std::pair<Sign, Sign>>(static_cast<std::size_t>(i + 1),
                                                          {Sign::Twisted, Sign::Parallel})};
}

FlagSigning read_flag(const SimpleGraph &g, const FlagSpec &flag, const CoverSigning &signing) {
    FlagSigning f;
    f.base_top = signing[require_edge(g, flag.base, flag.top)];
    for (Vertex u : flag.middles)
        f.middles.emplace_back(signing[require_edge(g, flag.base, u)], signing[require_edge(g, flag.top, u)]);
    return f;
}

void write_flag(const SimpleGraph &g, const FlagSpec &flag, const FlagSigning &f, CoverSigning &signing) {
    if (f.middles.size() != flag.middles.size())
        throw ModelError("flag signing does not match the flag's middle count");
    signing[require_edge(g, flag.base, flag.top)] = f.base_top;
    for (std::size_t k = 0; k < flag.middles.size(); ++k) {
        signing[require_edge(g, flag.base, flag.middles[k])] = f.middles[k].first;
        signing[require_edge(g, flag.top, flag.middles[k])] = f.middles[k].second;
    }
}

CoverSigning make_hm(const SimpleGraph &g, const ConstructionSpec &spec) {
    const auto &p = spec.params;
    auto counts = flags_per_base(p, spec.m);
    if (static_cast<int>(spec.path.size()) != spec.m || spec.flags_at.size() != counts.size())
        throw ModelError("construction spec mismatch: path length");
    for (std::size_t k = 0; k < counts.size(); ++k)
        if (static_cast<int>(spec.flags_at[k].size()) != counts[k])
            throw ModelError("construction spec mismatch: flag count at v_" + std::to_string(k + 1));

    auto signing = CoverSigning::all(g.edge_count(), Sign::Parallel);
    const auto twisted = twisted_flag(p.i);
    const auto parallel = parallel_flag(p.i);
    for (std::size_t k = 0; k < counts.size(); ++k) {
        bool last = k + 1 == counts.size();
        const auto &at = spec.flags_at[k];
        for (std::size_t t = 0; t < at.size(); ++t) {
            const auto &flag = spec.flags.at(static_cast<std::size_t>(at[t]));
            if (flag.base != spec.path[k] || static_cast<int>(flag.middles.size()) != p.i + 1)
                throw ModelError("construction spec mismatch: flag layout");
            bool is_twisted = !last || static_cast<int>(t) < p.i + 1;
            write_flag(g, flag, is_twisted ? twisted : parallel, signing);
        }
    }
    for (int k = 0; k + 1 < spec.m; ++k) {
        EdgeIndex e = require_edge(g, spec.path[static_cast<std::size_t>(k)], spec.path[static_cast<std::size_t>(k) + 1]);
        signing[e] = (k + 2 == spec.m) ? Sign::Parallel : Sign::Twisted;
    }
    if (g.edge_count() != spec.m - 1 + static_cast<int>(spec.flags.size()) * (2 * p.i + 3))
        throw ModelError("construction spec mismatch: edge count");
    return signing;
}

CountReport verify_counts(const DefectParams &params, int m) {
    auto [g, spec] = make_gm(params, m);
    const int i = params.i, j = params.j;
    CountReport r;
    r.params = params;
    r.m = m;
    r.vertices = g.vertex_count();
    r.edges = g.edge_count();
    r.expected_vertices = (i + 2) * (m * i + j + 2) + m;
    r.expected_edges = (2 * i + 3) * (m * i + j + 2) + m - 1;
    r.vertices_match = r.vertices == r.expected_vertices;
    r.edges_match = r.edges == r.expected_edges;
    r.sharpness_equality = (i + 1) * r.edges == (2 * i + 1) * r.vertices + j - i + 1;
    return r;
}

// ---------------------------------------------------------------------------

FlagSigning canonical_flag(const FlagSigning &f) {
    FlagSigning c = f;
    std::sort(c.middles.begin(), c.middles.end());
    return c;
}

std::uint64_t flag_orbit_size(const FlagSigning &f) {
    std::map<int, int> mult;
    for (const auto &p : f.middles)
        ++mult[pair_code(p)];
    std::uint64_t size = factorial(static_cast<int>(f.middles.size()));
    for (const auto &[code, k] : mult)
        size /= factorial(k);
    return size;
}

std::vector<FlagSigning> flag_sign_classes(const DefectParams &params) {
    const int middles = params.i + 1;
    const int bits = 2 * middles + 1;
    std::set<FlagSigning> reps;
    for (std::uint32_t code = 0; code < (1U << bits); ++code) {
        FlagSigning f;
        f.base_top = (code & 1U) ? Sign::Twisted : Sign::Parallel;
        for (int k = 0; k < middles; ++k) {
            auto bm = ((code >> (1 + 2 * k)) & 1U) ? Sign::Twisted : Sign::Parallel;
            auto tm = ((code >> (2 + 2 * k)) & 1U) ? Sign::Twisted : Sign::Parallel;
            f.middles.emplace_back(bm, tm);
        }
        reps.insert(canonical_flag(f));
    }
    return {reps.begin(), reps.end()};
}

FlagEffect flag_effect(const DefectParams &params, const FlagSigning &f) {
    GraphBuilder builder(1);
    auto flag = make_flag(builder, 0, params);
    auto g = builder.build();
    auto signing = CoverSigning::all(g.edge_count(), Sign::Parallel);
    write_flag(g, flag, f, signing);

    const int n = g.vertex_count();
    FlagEffect effect{-1, -1};
    for (Node base : {Node::Poor, Node::Rich}) {
        int best = -1;
        for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
            std::vector<Node> nodes(static_cast<std::size_t>(n));
            nodes[0] = base;
            for (int v = 1; v < n; ++v)
                nodes[static_cast<std::size_t>(v)] = ((mask >> (v - 1)) & 1U) ? Node::Rich : Node::Poor;
            ColoringMap map(nodes);
            auto defect = defect_degrees(g, signing, map);
            bool valid = true;
            for (int v = 1; v < n && valid; ++v) {
                int cap = nodes[static_cast<std::size_t>(v)] == Node::Poor ? params.i : params.j;
                valid = defect[static_cast<std::size_t>(v)] <= cap;
            }
            if (valid && (best < 0 || defect[0] < best))
                best = defect[0];
        }
        (base == Node::Poor ? effect.poor_base : effect.rich_base) = best;
    }
    return effect;
}

// ---------------------------------------------------------------------------

ReducedCoverSource::ReducedCoverSource(const WeightedInstance &instance, const ConstructionSpec &spec,
                                       std::optional<EdgeIndex> deleted)
    : host_(deleted ? instance.without_edge(*deleted) : instance), classes_(flag_sign_classes(spec.params)) {
    const auto &full = instance.graph();
    const auto &g = host_.graph();
    for (const auto &c : classes_)
        class_orbit_.push_back(flag_orbit_size(c));

    std::optional<Edge> removed;
    if (deleted)
        removed = full.edge(*deleted);
    auto flag_edges = [&](const FlagSpec &flag) {
        std::vector<Edge> out{Edge(flag.base, flag.top)};
        for (Vertex u : flag.middles) {
            out.emplace_back(flag.base, u);
            out.emplace_back(flag.top, u);
        }
        return out;
    };

    std::vector<char> covered(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto &at : spec.flags_at) {
        Group group;
        for (int idx : at) {
            const auto &flag = spec.flags.at(static_cast<std::size_t>(idx));
            if (static_cast<int>(flag.middles.size()) != spec.params.i + 1)
                throw std::invalid_argument("flag middle count does not match i + 1");
            auto edges = flag_edges(flag);
            for (const auto &e : edges)
                if (!full.adjacent(e.u, e.v))
                    throw std::invalid_argument("construction spec does not match the graph");
            if (removed && std::find(edges.begin(), edges.end(), *removed) != edges.end())
                continue; // damaged: its remaining edges become free
            for (const auto &e : edges)
                covered[static_cast<std::size_t>(*g.edge_index(e.u, e.v))] = 1;
            group.flags.push_back(flag);
        }
        if (group.flags.empty())
            continue;

        // flags in a group must be interchangeable, middles too
        const auto &first = group.flags.front();
        const auto top_cap = host_.capacity(first.top);
        const auto mid_cap = host_.capacity(first.middles.front());
        for (const auto &flag : group.flags) {
            if (flag.base != first.base)
                throw std::invalid_argument("flags listed together must share a base");
            if (!(host_.capacity(flag.top) == top_cap))
                throw std::invalid_argument("top capacities differ within a base; reduction unsound");
            for (Vertex u : flag.middles)
                if (!(host_.capacity(u) == mid_cap))
                    throw std::invalid_argument("middle capacities differ within a base; reduction unsound");
            if (g.degree(flag.top) != spec.params.i + 2)
                throw std::invalid_argument("flag top has extra neighbours");
            for (Vertex u : flag.middles)
                if (g.degree(u) != 2)
                    throw std::invalid_argument("flag middle has extra neighbours");
        }
        group.count = multichoose(classes_.size(), group.flags.size());
        size_ *= group.count;
        groups_.push_back(std::move(group));
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        if (!covered[static_cast<std::size_t>(e)])
            free_edges_.push_back(e);
    if (free_edges_.size() > 40)
        throw std::length_error("too many edges outside intact flags for reduced enumeration");
    size_ <<= free_edges_.size();
}

std::vector<int> ReducedCoverSource::unrank(const Group &group, std::uint64_t r) const {
    const auto k = group.flags.size();
    const auto c = classes_.size();
    std::vector<int> out(k);
    std::size_t prev = 0;
    for (std::size_t pos = 0; pos < k; ++pos) {
        const auto rem = k - pos - 1;
        for (std::size_t val = prev; val < c; ++val) {
            auto cnt = multichoose(c - val, rem);
            if (r < cnt) {
                out[pos] = static_cast<int>(val);
                prev = val;
                break;
            }
            r -= cnt;
        }
    }
    return out;
}

std::uint64_t ReducedCoverSource::rank(const Group &group, const std::vector<int> &sorted) const {
    const auto k = group.flags.size();
    const auto c = classes_.size();
    std::uint64_t r = 0;
    std::size_t prev = 0;
    for (std::size_t pos = 0; pos < k; ++pos) {
        const auto rem = k - pos - 1;
        for (std::size_t val = prev; val < static_cast<std::size_t>(sorted[pos]); ++val)
            r += multichoose(c - val, rem);
        prev = static_cast<std::size_t>(sorted[pos]);
    }
    return r;
}

void ReducedCoverSource::split(std::uint64_t index, std::vector<std::uint64_t> &group_ranks,
                               std::uint64_t &free_bits) const {
    const auto f = free_edges_.size();
    free_bits = f == 0 ? 0 : index & ((std::uint64_t{1} << f) - 1);
    std::uint64_t rest = index >> f;
    group_ranks.assign(groups_.size(), 0);
    for (std::size_t g = groups_.size(); g-- > 0;) {
        group_ranks[g] = rest % groups_[g].count;
        rest /= groups_[g].count;
    }
}

void ReducedCoverSource::fill(std::uint64_t index, CoverSigning &out) const {
    const auto &g = host_.graph();
    if (out.size() != g.edge_count())
        out = CoverSigning::all(g.edge_count(), Sign::Parallel);
    std::vector<std::uint64_t> ranks;
    std::uint64_t free_bits = 0;
    split(index, ranks, free_bits);
    for (std::size_t k = 0; k < groups_.size(); ++k) {
        auto cls = unrank(groups_[k], ranks[k]);
        for (std::size_t t = 0; t < cls.size(); ++t)
            write_flag(g, groups_[k].flags[t], classes_[static_cast<std::size_t>(cls[t])], out);
    }
    const auto f = free_edges_.size();
    for (std::size_t q = 0; q < f; ++q)
        out[free_edges_[q]] = ((free_bits >> (f - 1 - q)) & 1U) ? Sign::Twisted : Sign::Parallel;
}

std::uint64_t ReducedCoverSource::weight(std::uint64_t index) const {
    std::vector<std::uint64_t> ranks;
    std::uint64_t free_bits = 0;
    split(index, ranks, free_bits);
    std::uint64_t w = 1;
    for (std::size_t k = 0; k < groups_.size(); ++k) {
        auto cls = unrank(groups_[k], ranks[k]);
        std::map<int, int> mult;
        for (int c : cls) {
            ++mult[c];
            w *= class_orbit_[static_cast<std::size_t>(c)];
        }
        std::uint64_t arrangements = factorial(static_cast<int>(cls.size()));
        for (const auto &[c, count] : mult)
            arrangements /= factorial(count);
        w *= arrangements;
    }
    return w;
}

std::uint64_t ReducedCoverSource::class_index(const CoverSigning &signing) const {
    const auto &g = host_.graph();
    check_signing(g, signing);
    std::uint64_t index = 0;
    for (const auto &group : groups_) {
        std::vector<int> cls;
        for (const auto &flag : group.flags) {
            auto c = canonical_flag(read_flag(g, flag, signing));
            auto it = std::lower_bound(classes_.begin(), classes_.end(), c);
            cls.push_back(static_cast<int>(it - classes_.begin()));
        }
        std::sort(cls.begin(), cls.end());
        index = index * group.count + rank(group, cls);
    }
    for (EdgeIndex e : free_edges_)
        index = (index << 1) | (signing[e] == Sign::Twisted ? 1U : 0U);
    return index;
}

std::vector<EdgeOrbit> edge_orbits(const SimpleGraph &g, const ConstructionSpec &spec) {
    std::vector<EdgeOrbit> orbits;
    std::vector<char> covered(static_cast<std::size_t>(g.edge_count()), 0);
    auto push = [&](std::vector<EdgeIndex> members) {
        if (members.empty())
            return;
        std::sort(members.begin(), members.end());
        for (EdgeIndex e : members)
            covered[static_cast<std::size_t>(e)] = 1;
        orbits.push_back({members.front(), std::move(members)});
    };
    for (const auto &at : spec.flags_at) {
        std::vector<EdgeIndex> base_top, base_middle, top_middle;
        for (int idx : at) {
            const auto &flag = spec.flags.at(static_cast<std::size_t>(idx));
            base_top.push_back(require_edge(g, flag.base, flag.top));
            for (Vertex u : flag.middles) {
                base_middle.push_back(require_edge(g, flag.base, u));
                top_middle.push_back(require_edge(g, flag.top, u));
            }
        }
        push(std::move(base_top));
        push(std::move(base_middle));
        push(std::move(top_middle));
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        if (!covered[static_cast<std::size_t>(e)])
            push({e});
    std::sort(orbits.begin(), orbits.end(),
              [](const EdgeOrbit &a, const EdgeOrbit &b) { return a.representative < b.representative; });
    return orbits;
}

} // namespace dpc
