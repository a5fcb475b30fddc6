#pragma once

// Graph, cover and capacity data model for defective DP-colorings with
// full 2-fold covers.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dpc {

using Vertex = int;
using EdgeIndex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u{};
    Vertex v{};

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Thrown when a graph, instance or signing violates its structural
/// invariants.
class ModelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A simple undirected graph on vertices 0..n-1. Edges are kept in canonical
/// order (sorted by (min endpoint, max endpoint)); every per-edge array in
/// the library (signings in particular) is indexed by that order.
class SimpleGraph {
public:
    struct Incidence {
        Vertex neighbor;
        EdgeIndex edge;
    };

    SimpleGraph() = default;
    explicit SimpleGraph(int n, std::vector<Edge> edges = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(EdgeIndex e) const { return edges_.at(static_cast<std::size_t>(e)); }

    int degree(Vertex v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }
    std::span<const Incidence> incidences(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }

    std::optional<EdgeIndex> edge_index(Vertex a, Vertex b) const;
    bool adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

    /// Same vertex set, one edge removed. Remaining edges keep their relative order.
    SimpleGraph without_edge(EdgeIndex e) const;
    /// Removes vertex v and relabels vertices above v down by one.
    SimpleGraph without_vertex(Vertex v) const;

    friend bool operator==(const SimpleGraph &a, const SimpleGraph &b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adj_;
};

struct DefectParams {
    int i = 0; ///< poor defect bound
    int j = 0; ///< rich defect bound

    friend bool operator==(const DefectParams &, const DefectParams &) = default;
};

void validate(const DefectParams &params);

enum class Node : std::uint8_t { Poor = 0, Rich = 1 };
enum class Sign : std::uint8_t { Parallel = 0, Twisted = 1 };

char to_char(Node n);
char to_char(Sign s);

/// Per-vertex capacity pair (c1, c2) for the poor and rich node.
struct Capacity {
    int poor = 0;
    int rich = 0;

    int of(Node n) const { return n == Node::Poor ? poor : rich; }
    friend bool operator==(const Capacity &, const Capacity &) = default;
};

using CapacityFunction = std::vector<Capacity>;

/// A graph together with defect parameters and a capacity function: the
/// weighted pair (G, c).
class WeightedInstance {
public:
    WeightedInstance() = default;
    /// Capacities default to (i, j) everywhere when `caps` is empty.
    WeightedInstance(SimpleGraph graph, DefectParams params, CapacityFunction caps = {});

    const SimpleGraph &graph() const { return graph_; }
    const DefectParams &params() const { return params_; }
    const CapacityFunction &capacities() const { return caps_; }
    const Capacity &capacity(Vertex v) const { return caps_.at(static_cast<std::size_t>(v)); }

    WeightedInstance without_edge(EdgeIndex e) const;
    WeightedInstance without_vertex(Vertex v) const;
    WeightedInstance with_capacity(Vertex v, Capacity c) const;

    friend bool operator==(const WeightedInstance &, const WeightedInstance &) = default;

private:
    SimpleGraph graph_;
    DefectParams params_;
    CapacityFunction caps_;
};

/// A full 2-fold cover, one sign per edge in canonical edge order.
/// Parallel: p(u)~p(v), r(u)~r(v). Twisted: p(u)~r(v), r(u)~p(v).
class CoverSigning {
public:
    CoverSigning() = default;
    explicit CoverSigning(std::vector<Sign> signs) : signs_(std::move(signs)) {}
    static CoverSigning all(int edge_count, Sign s) {
        return CoverSigning(std::vector<Sign>(static_cast<std::size_t>(edge_count), s));
    }
    /// Edge 0 is the most significant bit, so numeric order on `bits`
    /// equals lexicographic order on sign vectors. Requires edge_count <= 64.
    static CoverSigning from_counter(std::uint64_t bits, int edge_count);

    int size() const { return static_cast<int>(signs_.size()); }
    Sign operator[](EdgeIndex e) const { return signs_[static_cast<std::size_t>(e)]; }
    Sign &operator[](EdgeIndex e) { return signs_[static_cast<std::size_t>(e)]; }
    const std::vector<Sign> &signs() const { return signs_; }

    CoverSigning without_edge(EdgeIndex e) const;
    std::string to_string() const;

    friend auto operator<=>(const CoverSigning &, const CoverSigning &) = default;

private:
    std::vector<Sign> signs_;
};

void check_signing(const SimpleGraph &g, const CoverSigning &s);

/// Whether node a of u and node b of v are adjacent in the cover across an
/// edge with sign s.
inline bool nodes_adjacent(Node a, Node b, Sign s) {
    return (a == b) == (s == Sign::Parallel);
}

/// Choice of one node per vertex (an H-map).
class ColoringMap {
public:
    ColoringMap() = default;
    explicit ColoringMap(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

    int size() const { return static_cast<int>(nodes_.size()); }
    Node operator[](Vertex v) const { return nodes_[static_cast<std::size_t>(v)]; }
    Node &operator[](Vertex v) { return nodes_[static_cast<std::size_t>(v)]; }
    const std::vector<Node> &nodes() const { return nodes_; }

    /// "PRRP..." form; parse throws ModelError on other characters.
    std::string to_string() const;
    static ColoringMap parse(const std::string &text);

    friend bool operator==(const ColoringMap &, const ColoringMap &) = default;

private:
    std::vector<Node> nodes_;
};

/// Explicit cover graph: node 2v is p(v), node 2v+1 is r(v).
class CoverGraph {
public:
    static int node_id(Vertex v, Node n) { return 2 * v + static_cast<int>(n); }
    static Vertex owner(int node) { return node / 2; }
    static Node kind(int node) { return static_cast<Node>(node % 2); }

    explicit CoverGraph(int node_count) : adj_(static_cast<std::size_t>(node_count)) {}

    int node_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    std::span<const int> neighbors(int node) const { return adj_.at(static_cast<std::size_t>(node)); }
    int degree(int node) const { return static_cast<int>(neighbors(node).size()); }
    bool adjacent(int a, int b) const;

    void add_edge(int a, int b);

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

CoverGraph build_cover_graph(const SimpleGraph &g, const CoverSigning &signing);

} // namespace dpc
