#pragma once

// Sharp constructions built from flags, their bad covers, and the flag
// symmetries that make cover enumeration on them tractable.
//
// A flag at base v is a top vertex x adjacent to v together with i+1
// middle vertices, each adjacent to exactly v and x.

#include <dpcolor/model.hpp>
#include <dpcolor/solver.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace dpc {

struct FlagSpec {
    Vertex base;
    Vertex top;
    std::vector<Vertex> middles;

    friend bool operator==(const FlagSpec &, const FlagSpec &) = default;
};

/// Layout of G_m: path v_1..v_m, and for each path position the indices
/// (into `flags`) of the flags based there.
struct ConstructionSpec {
    DefectParams params;
    int m = 0;
    std::vector<Vertex> path;
    std::vector<FlagSpec> flags;
    std::vector<std::vector<int>> flags_at;
};

/// Mutable edge list used while assembling a construction.
class GraphBuilder {
public:
    explicit GraphBuilder(int n = 0) : n_(n) {}

    Vertex add_vertex() { return n_++; }
    void add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    SimpleGraph build() const { return SimpleGraph(n_, edges_); }

private:
    int n_;
    std::vector<Edge> edges_;
};

/// Appends a fresh top and i+1 middles at `base`: i+2 vertices, 2i+3 edges.
FlagSpec make_flag(GraphBuilder &builder, Vertex base, const DefectParams &params);

/// Requires i >= 1, j >= 2i, m >= 1. Vertices are numbered path first,
/// then flags in base order, each flag top first and then its middles.
std::pair<SimpleGraph, ConstructionSpec> make_gm(const DefectParams &params, int m);

/// Instance of G_m with c = (i, j) everywhere.
WeightedInstance gm_instance(const SimpleGraph &g, const ConstructionSpec &spec);

/// The bad cover H_m. m = 1: i+1 twisted flags, j+1 parallel flags.
/// m >= 2: every flag at v_1..v_{m-1} twisted, i+1 twisted and j parallel at
/// v_m; path edges twisted except v_{m-1}v_m, which is parallel.
CoverSigning make_hm(const SimpleGraph &g, const ConstructionSpec &spec);

struct CountReport {
    DefectParams params;
    int m = 0;
    int vertices = 0;
    int edges = 0;
    int expected_vertices = 0; ///< (i+2)(mi+j+2)+m
    int expected_edges = 0;    ///< (2i+3)(mi+j+2)+m-1
    bool vertices_match = false;
    bool edges_match = false;
    bool sharpness_equality = false; ///< (i+1)|E| == (2i+1)|V| + j - i + 1

    bool ok() const { return vertices_match && edges_match && sharpness_equality; }
};

CountReport verify_counts(const DefectParams &params, int m);

// ---------------------------------------------------------------------------
// Flag signings and their symmetry classes

/// Signs on one flag: base-top, then per middle (base-middle, top-middle).
struct FlagSigning {
    Sign base_top = Sign::Parallel;
    std::vector<std::pair<Sign, Sign>> middles;

    friend auto operator<=>(const FlagSigning &, const FlagSigning &) = default;
};

FlagSigning parallel_flag(int i);
/// base-top twisted, top-middle parallel, base-middle twisted.
FlagSigning twisted_flag(int i);

/// Representative of the orbit under permutations of the middles (middle
/// sign pairs sorted ascending).
FlagSigning canonical_flag(const FlagSigning &f);
/// Number of distinct signings in the orbit of f.
std::uint64_t flag_orbit_size(const FlagSigning &f);

/// One representative per orbit of the 2^(2i+3) flag signings, in
/// ascending order. i = 1 gives 20 classes.
std::vector<FlagSigning> flag_sign_classes(const DefectParams &params);

FlagSigning read_flag(const SimpleGraph &g, const FlagSpec &flag, const CoverSigning &signing);
void write_flag(const SimpleGraph &g, const FlagSpec &flag, const FlagSigning &f, CoverSigning &signing);

/// Least number of conflicts a flag forces on its base, for each choice
/// at the base, over completions valid at the top and middles (capacity
/// (i, j) there). -1 when no valid completion exists.
struct FlagEffect {
    int poor_base = 0;
    int rich_base = 0;

    friend auto operator<=>(const FlagEffect &, const FlagEffect &) = default;
};

FlagEffect flag_effect(const DefectParams &params, const FlagSigning &f);

// ---------------------------------------------------------------------------
// Symmetry-reduced cover enumeration

/// Covers of G_m (or of G_m minus one edge) up to the flag symmetries:
/// middles of a flag permute freely, intact flags at one base permute
/// freely. Each index names a multiset of flag classes per base, times a
/// free sign choice on every remaining edge (path edges and the surviving
/// edges of a damaged flag). weight(index) is the number of concrete
/// signings in that class, so the weights sum to 2^|E(host)|.
///
/// Requires capacities that are invariant under those symmetries; the
/// constructor throws std::invalid_argument otherwise.
class ReducedCoverSource final : public SigningSource {
public:
    ReducedCoverSource(const WeightedInstance &instance, const ConstructionSpec &spec,
                       std::optional<EdgeIndex> deleted = std::nullopt);

    /// The graph the produced signings belong to (G, or G minus the edge).
    const WeightedInstance &host() const { return host_; }

    std::uint64_t size() const override { return size_; }
    void fill(std::uint64_t index, CoverSigning &out) const override;
    std::uint64_t weight(std::uint64_t index) const override;

    /// Index of the class containing `signing` (a signing of host()).
    std::uint64_t class_index(const CoverSigning &signing) const;

    int free_edge_count() const { return static_cast<int>(free_edges_.size()); }

private:
    struct Group {
        std::vector<FlagSpec> flags; // intact flags at one base, in spec order
        std::uint64_t count = 0;     // multisets of size flags.size()
    };

    std::vector<int> unrank(const Group &group, std::uint64_t rank) const;
    std::uint64_t rank(const Group &group, const std::vector<int> &classes) const;
    void split(std::uint64_t index, std::vector<std::uint64_t> &group_ranks, std::uint64_t &free_bits) const;

    WeightedInstance host_;
    std::vector<FlagSigning> classes_;
    std::vector<std::uint64_t> class_orbit_;
    std::vector<Group> groups_;
    std::vector<EdgeIndex> free_edges_;
    std::uint64_t size_ = 1;
};

/// Edge orbits of G_m under the flag symmetries: per base, the base-top,
/// base-middle and top-middle edges of its flags; every path edge alone.
struct EdgeOrbit {
    EdgeIndex representative;
    std::vector<EdgeIndex> members;
};

std::vector<EdgeOrbit> edge_orbits(const SimpleGraph &g, const ConstructionSpec &spec);

} // namespace dpc
