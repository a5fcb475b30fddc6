#include <dpcolor/model.hpp>

#include <algorithm>
#include <string>

namespace dpc {

namespace {

std::string edge_text(const Edge &e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

} // namespace

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0)
        throw ModelError("negative vertex count");
    for (const auto &e : edges_) {
        if (e.u < 0 || e.v >= n)
            throw ModelError("edge " + edge_text(e) + " has an endpoint out of range");
        if (e.u == e.v)
            throw ModelError("loop at vertex " + std::to_string(e.u));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw ModelError("duplicate edge " + edge_text(*dup));

    adj_.resize(static_cast<std::size_t>(n));
    for (EdgeIndex k = 0; k < edge_count(); ++k) {
        const auto &e = edges_[static_cast<std::size_t>(k)];
        adj_[static_cast<std::size_t>(e.u)].push_back({e.v, k});
        adj_[static_cast<std::size_t>(e.v)].push_back({e.u, k});
    }
}

std::optional<EdgeIndex> SimpleGraph::edge_index(Vertex a, Vertex b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_)
        return std::nullopt;
    Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return std::nullopt;
    return static_cast<EdgeIndex>(it - edges_.begin());
}

SimpleGraph SimpleGraph::without_edge(EdgeIndex e) const {
    auto rest = edges_;
    rest.erase(rest.begin() + e);
    return SimpleGraph(n_, std::move(rest));
}

SimpleGraph SimpleGraph::without_vertex(Vertex v) const {
    std::vector<Edge> rest;
    for (const auto &e : edges_) {
        if (e.u == v || e.v == v)
            continue;
        rest.emplace_back(e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v);
    }
    return SimpleGraph(n_ - 1, std::move(rest));
}

void validate(const DefectParams &params) {
    if (params.i < 0 || params.j < params.i)
        throw ModelError("defect parameters must satisfy 0 <= i <= j (got i=" + std::to_string(params.i) +
                         " j=" + std::to_string(params.j) + ")");
}

char to_char(Node n) { return n == Node::Poor ? 'P' : 'R'; }
char to_char(Sign s) { return s == Sign::Parallel ? 'P' : 'T'; }

WeightedInstance::WeightedInstance(SimpleGraph graph, DefectParams params, CapacityFunction caps)
    : graph_(std::move(graph)), params_(params), caps_(std::move(caps)) {
    validate(params_);
    if (caps_.empty())
        caps_.assign(static_cast<std::size_t>(graph_.vertex_count()), Capacity{params_.i, params_.j});
    if (static_cast<int>(caps_.size()) != graph_.vertex_count())
        throw ModelError("capacity function size does not match vertex count");
    for (std::size_t v = 0; v < caps_.size(); ++v) {
        const auto &c = caps_[v];
        if (c.poor < -1 || c.poor > params_.i || c.rich < -1 || c.rich > params_.j)
            throw ModelError("capacity (" + std::to_string(c.poor) + "," + std::to_string(c.rich) +
                             ") of vertex " + std::to_string(v) + " outside [-1,i]x[-1,j]");
    }
}

WeightedInstance WeightedInstance::without_edge(EdgeIndex e) const {
    return WeightedInstance(graph_.without_edge(e), params_, caps_);
}

WeightedInstance WeightedInstance::without_vertex(Vertex v) const {
    auto caps = caps_;
    caps.erase(caps.begin() + v);
    return WeightedInstance(graph_.without_vertex(v), params_, std::move(caps));
}

WeightedInstance WeightedInstance::with_capacity(Vertex v, Capacity c) const {
    auto caps = caps_;
    caps.at(static_cast<std::size_t>(v)) = c;
    return WeightedInstance(graph_, params_, std::move(caps));
}

CoverSigning CoverSigning::from_counter(std::uint64_t bits, int edge_count) {
    if (edge_count > 64)
        throw ModelError("counter signings support at most 64 edges");
    std::vector<Sign> signs(static_cast<std::size_t>(edge_count));
    for (int e = 0; e < edge_count; ++e) {
        int shift = edge_count - 1 - e;
        signs[static_cast<std::size_t>(e)] = ((bits >> shift) & 1U) ? Sign::Twisted : Sign::Parallel;
    }
    return CoverSigning(std::move(signs));
}

CoverSigning CoverSigning::without_edge(EdgeIndex e) const {
    auto rest = signs_;
    rest.erase(rest.begin() + e);
    return CoverSigning(std::move(rest));
}

std::string CoverSigning::to_string() const {
    std::string out;
    out.reserve(signs_.size());
    for (auto s : signs_)
        out.push_back(to_char(s));
    return out;
}

void check_signing(const SimpleGraph &g, const CoverSigning &s) {
    if (s.size() != g.edge_count())
        throw ModelError("signing has " + std::to_string(s.size()) + " signs for " +
                         std::to_string(g.edge_count()) + " edges");
}

std::string ColoringMap::to_string() const {
    std::string out;
    out.reserve(nodes_.size());
    for (auto n : nodes_)
        out.push_back(to_char(n));
    return out;
}

ColoringMap ColoringMap::parse(const std::string &text) {
    std::vector<Node> nodes;
    nodes.reserve(text.size());
    for (char ch : text) {
        if (ch == 'P' || ch == 'p')
            nodes.push_back(Node::Poor);
        else if (ch == 'R' || ch == 'r')
            nodes.push_back(Node::Rich);
        else
            throw ModelError(std::string("invalid map character '") + ch + "'");
    }
    return ColoringMap(std::move(nodes));
}

bool CoverGraph::adjacent(int a, int b) const {
    auto nb = neighbors(a);
    return std::find(nb.begin(), nb.end(), b) != nb.end();
}

void CoverGraph::add_edge(int a, int b) {
    adj_.at(static_cast<std::size_t>(a)).push_back(b);
    adj_.at(static_cast<std::size_t>(b)).push_back(a);
    ++edge_count_;
}

CoverGraph build_cover_graph(const SimpleGraph &g, const CoverSigning &signing) {
    check_signing(g, signing);
    CoverGraph h(2 * g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        h.add_edge(CoverGraph::node_id(v, Node::Poor), CoverGraph::node_id(v, Node::Rich));
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const auto &uv = g.edge(e);
        for (Node a : {Node::Poor, Node::Rich}) {
            for (Node b : {Node::Poor, Node::Rich}) {
                if (nodes_adjacent(a, b, signing[e]))
                    h.add_edge(CoverGraph::node_id(uv.u, a), CoverGraph::node_id(uv.v, b));
            }
        }
    }
    return h;
}

} // namespace dpc
