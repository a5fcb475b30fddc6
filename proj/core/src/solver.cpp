#include <dpcolor/parallel.hpp>
#include <dpcolor/solver.hpp>

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace dpc {

std::vector<int> defect_degrees(const SimpleGraph &g, const CoverSigning &signing, const ColoringMap &map) {
    check_signing(g, signing);
    if (map.size() != g.vertex_count())
        throw ModelError("map covers " + std::to_string(map.size()) + " of " + std::to_string(g.vertex_count()) +
                         " vertices");
    std::vector<int> defect(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const auto &uv = g.edge(e);
        if (nodes_adjacent(map[uv.u], map[uv.v], signing[e])) {
            ++defect[static_cast<std::size_t>(uv.u)];
            ++defect[static_cast<std::size_t>(uv.v)];
        }
    }
    return defect;
}

std::optional<Violation> check_coloring(const WeightedInstance &instance, const CoverSigning &signing,
                                        const ColoringMap &map) {
    auto defect = defect_degrees(instance.graph(), signing, map);
    for (Vertex v = 0; v < instance.graph().vertex_count(); ++v) {
        int cap = instance.capacity(v).of(map[v]);
        int d = defect[static_cast<std::size_t>(v)];
        if (d > cap)
            return Violation{v, map[v], d, cap};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

ColoringSearch::ColoringSearch(const WeightedInstance &instance) : instance_(instance) {
    const auto &g = instance_.graph();
    int n = g.vertex_count();
    order_.resize(static_cast<std::size_t>(n));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    links_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        for (const auto &inc : g.incidences(v))
            links_[static_cast<std::size_t>(v)].push_back({inc.neighbor, inc.edge});

    choice_.assign(static_cast<std::size_t>(n), -1);
    defect_.assign(static_cast<std::size_t>(n), 0);
    conf_.assign(static_cast<std::size_t>(n), {0, 0});
    blocked_.assign(static_cast<std::size_t>(n), {0, 0});
    touched_stack_.resize(static_cast<std::size_t>(n));
}

bool ColoringSearch::alive(Vertex w, Node b) const {
    auto k = static_cast<std::size_t>(w);
    auto idx = static_cast<std::size_t>(b);
    return conf_[k][idx] <= instance_.capacity(w).of(b) && blocked_[k][idx] == 0;
}

void ColoringSearch::block_around(Vertex u, int delta, std::vector<Vertex> *touched) {
    Node chosen = static_cast<Node>(choice_[static_cast<std::size_t>(u)]);
    for (const auto &link : links_[static_cast<std::size_t>(u)]) {
        Vertex w = link.other;
        if (choice_[static_cast<std::size_t>(w)] >= 0)
            continue;
        // the node of w adjacent to u's chosen node
        Node hit = (*signing_)[link.edge] == Sign::Parallel ? chosen
                                                             : (chosen == Node::Poor ? Node::Rich : Node::Poor);
        blocked_[static_cast<std::size_t>(w)][static_cast<std::size_t>(hit)] += delta;
        if (touched)
            touched->push_back(w);
    }
}

void ColoringSearch::apply(Vertex v, Node a, std::vector<Vertex> &touched) {
    auto vk = static_cast<std::size_t>(v);
    choice_[vk] = static_cast<std::int8_t>(a);
    defect_[vk] = conf_[vk][static_cast<std::size_t>(a)];
    const auto &links = links_[vk];
    for (const auto &link : links) {
        auto wk = static_cast<std::size_t>(link.other);
        if (choice_[wk] >= 0)
            continue;
        Sign s = (*signing_)[link.edge];
        for (Node b : {Node::Poor, Node::Rich})
            if (nodes_adjacent(a, b, s))
                ++conf_[wk][static_cast<std::size_t>(b)];
        touched.push_back(link.other);
    }
    for (const auto &link : links) {
        auto uk = static_cast<std::size_t>(link.other);
        if (choice_[uk] < 0 || link.other == v)
            continue;
        Node cu = static_cast<Node>(choice_[uk]);
        if (!nodes_adjacent(a, cu, (*signing_)[link.edge]))
            continue;
        ++defect_[uk];
        if (defect_[uk] == instance_.capacity(link.other).of(cu))
            block_around(link.other, +1, &touched);
    }
    if (defect_[vk] == instance_.capacity(v).of(a))
        block_around(v, +1, &touched);
}

void ColoringSearch::undo(Vertex v, Node a) {
    auto vk = static_cast<std::size_t>(v);
    if (defect_[vk] == instance_.capacity(v).of(a))
        block_around(v, -1, nullptr);
    const auto &links = links_[vk];
    for (const auto &link : links) {
        auto uk = static_cast<std::size_t>(link.other);
        if (choice_[uk] < 0)
            continue;
        Node cu = static_cast<Node>(choice_[uk]);
        if (!nodes_adjacent(a, cu, (*signing_)[link.edge]))
            continue;
        if (defect_[uk] == instance_.capacity(link.other).of(cu))
            block_around(link.other, -1, nullptr);
        --defect_[uk];
    }
    for (const auto &link : links) {
        auto wk = static_cast<std::size_t>(link.other);
        if (choice_[wk] >= 0)
            continue;
        Sign s = (*signing_)[link.edge];
        for (Node b : {Node::Poor, Node::Rich})
            if (nodes_adjacent(a, b, s))
                --conf_[wk][static_cast<std::size_t>(b)];
    }
    choice_[vk] = -1;
}

bool ColoringSearch::assign(int depth) {
    if (depth == static_cast<int>(order_.size()))
        return true;
    Vertex v = order_[static_cast<std::size_t>(depth)];
    auto &touched = touched_stack_[static_cast<std::size_t>(depth)];
    for (Node a : {Node::Rich, Node::Poor}) {
        if (!alive(v, a))
            continue;
        ++nodes_;
        touched.clear();
        apply(v, a, touched);
        bool consistent = true;
        for (Vertex w : touched) {
            if (choice_[static_cast<std::size_t>(w)] < 0 && !alive(w, Node::Poor) && !alive(w, Node::Rich)) {
                consistent = false;
                break;
            }
        }
        if (consistent && assign(depth + 1))
            return true;
        undo(v, a);
    }
    return false;
}

std::optional<ColoringMap> ColoringSearch::solve(const CoverSigning &signing, SearchStats *stats) {
    const auto &g = instance_.graph();
    check_signing(g, signing);
    signing_ = &signing;
    std::fill(choice_.begin(), choice_.end(), -1);
    std::fill(defect_.begin(), defect_.end(), 0);
    std::fill(conf_.begin(), conf_.end(), std::array<int, 2>{0, 0});
    std::fill(blocked_.begin(), blocked_.end(), std::array<int, 2>{0, 0});
    nodes_ = 0;

    bool found = true;
    for (Vertex v = 0; v < g.vertex_count() && found; ++v)
        if (!alive(v, Node::Poor) && !alive(v, Node::Rich))
            found = false;
    if (found)
        found = assign(0);

    if (stats)
        stats->nodes_expanded += nodes_;
    signing_ = nullptr;
    if (!found)
        return std::nullopt;
    std::vector<Node> nodes(choice_.size());
    for (std::size_t v = 0; v < choice_.size(); ++v)
        nodes[v] = static_cast<Node>(choice_[v]);
    return ColoringMap(std::move(nodes));
}

std::optional<ColoringMap> find_coloring(const WeightedInstance &instance, const CoverSigning &signing,
                                         SearchStats *stats) {
    ColoringSearch search(instance);
    return search.solve(signing, stats);
}

std::optional<ColoringMap> brute_force_oracle(const WeightedInstance &instance, const CoverSigning &signing,
                                              int max_vertices) {
    int n = instance.graph().vertex_count();
    if (n > max_vertices || n > 62)
        throw std::length_error("brute-force oracle limited to " + std::to_string(max_vertices) + " vertices");
    check_signing(instance.graph(), signing);
    std::vector<Node> nodes(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (int v = 0; v < n; ++v)
            nodes[static_cast<std::size_t>(v)] = ((mask >> v) & 1U) ? Node::Rich : Node::Poor;
        ColoringMap map(nodes);
        if (!check_coloring(instance, signing, map))
            return map;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

ExhaustiveSigningSource::ExhaustiveSigningSource(int edge_count) : edge_count_(edge_count) {
    if (edge_count < 0 || edge_count > 62)
        throw std::length_error("exhaustive signing enumeration limited to 62 edges");
}

std::uint64_t ExhaustiveSigningSource::size() const { return std::uint64_t{1} << edge_count_; }

void ExhaustiveSigningSource::fill(std::uint64_t index, CoverSigning &out) const {
    if (out.size() != edge_count_)
        out = CoverSigning::all(edge_count_, Sign::Parallel);
    for (int e = 0; e < edge_count_; ++e)
        out[e] = ((index >> (edge_count_ - 1 - e)) & 1U) ? Sign::Twisted : Sign::Parallel;
}

SampledSigningSource::SampledSigningSource(int edge_count, std::uint64_t count, std::uint64_t seed) {
    if (count == 0)
        throw std::invalid_argument("sample count must be at least 1");
    std::mt19937_64 rng(seed);
    samples_.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        std::vector<Sign> signs(static_cast<std::size_t>(edge_count));
        std::uint64_t bits = 0;
        for (int e = 0; e < edge_count; ++e) {
            if (e % 64 == 0)
                bits = rng();
            signs[static_cast<std::size_t>(e)] = (bits & 1U) ? Sign::Twisted : Sign::Parallel;
            bits >>= 1;
        }
        samples_.emplace_back(std::move(signs));
    }
}

namespace {

struct ChunkTally {
    std::uint64_t signings = 0;
    std::uint64_t classes = 0;
    std::uint64_t nodes = 0;
};

} // namespace

AllCoversResult search_covers(const WeightedInstance &instance, const SigningSource &source,
                              const CoverSearchOptions &options) {
    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t total = source.size();
    const std::uint64_t chunk = std::max<std::uint64_t>(64, total / 65536 + 1);
    const std::uint64_t chunks = (total + chunk - 1) / chunk;

    std::vector<ChunkTally> tallies(static_cast<std::size_t>(chunks));
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{none};

    unsigned workers = std::min<std::uint64_t>(resolve_workers(options.workers), std::max<std::uint64_t>(chunks, 1));
    run_workers(workers, [&](unsigned) {
        ColoringSearch search(instance);
        CoverSigning signing;
        for (;;) {
            std::uint64_t c = next.fetch_add(1);
            if (c >= chunks)
                return;
            std::uint64_t begin = c * chunk;
            if (begin > best.load())
                continue;
            std::uint64_t end = std::min(total, begin + chunk);
            ChunkTally tally;
            for (std::uint64_t k = begin; k < end; ++k) {
                if (k > best.load())
                    break;
                source.fill(k, signing);
                SearchStats stats;
                bool ok = search.solve(signing, &stats).has_value();
                tally.nodes += stats.nodes_expanded;
                tally.signings += source.weight(k);
                ++tally.classes;
                if (!ok) {
                    std::uint64_t seen = best.load();
                    while (k < seen && !best.compare_exchange_weak(seen, k)) {
                    }
                    break;
                }
            }
            tallies[static_cast<std::size_t>(c)] = tally;
        }
    });

    AllCoversResult result;
    result.certifying = source.certifying();
    std::uint64_t witness = best.load();
    std::uint64_t last_chunk = witness == none ? chunks : witness / chunk + 1;
    for (std::uint64_t c = 0; c < last_chunk; ++c) {
        const auto &t = tallies[static_cast<std::size_t>(c)];
        result.signings_examined += t.signings;
        result.classes_examined += t.classes;
        result.nodes_expanded += t.nodes;
    }
    if (witness != none) {
        result.verdict = CoverVerdict::WitnessFound;
        result.witness_index = witness;
        CoverSigning s;
        source.fill(witness, s);
        result.witness = std::move(s);
    }
    return result;
}

AllCoversResult colorable_all_covers(const WeightedInstance &instance, const CoverSearchOptions &options) {
    int m = instance.graph().edge_count();
    if (m > options.max_edges)
        throw std::length_error("graph has " + std::to_string(m) + " edges; exhaustive cover enumeration is limited to " +
                                std::to_string(options.max_edges) + " without a symmetry-reduced iterator");
    ExhaustiveSigningSource source(m);
    return search_covers(instance, source, options);
}

AllCoversResult sample_covers(const WeightedInstance &instance, std::uint64_t count, std::uint64_t seed,
                              const CoverSearchOptions &options) {
    SampledSigningSource source(instance.graph().edge_count(), count, seed);
    return search_covers(instance, source, options);
}

} // namespace dpc
