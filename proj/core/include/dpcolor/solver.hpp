#pragma once

// Deciding (c, H)-colorability for one signing, validating maps, and
// quantifying over the cover space.

#include <dpcolor/model.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace dpc {

/// A chosen node whose degree in the induced cover graph exceeds its
/// capacity. A node of capacity -1 is always a violation.
struct Violation {
    Vertex vertex;
    Node node;
    int defect;
    int capacity;

    friend bool operator==(const Violation &, const Violation &) = default;
};

/// nullopt means the map is a valid (c, H)-coloring; otherwise the first
/// violation in vertex order.
std::optional<Violation> check_coloring(const WeightedInstance &instance, const CoverSigning &signing,
                                        const ColoringMap &map);

/// Per-vertex H_phi degree of the chosen node.
std::vector<int> defect_degrees(const SimpleGraph &g, const CoverSigning &signing, const ColoringMap &map);

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
};

/// Complete backtracking search for one instance, reusable across many
/// signings. Vertices are assigned in descending degree order (ties by
/// index); a branch is cut as soon as a chosen node, or an already chosen
/// neighbour, exceeds its capacity, or some unassigned neighbour has no
/// node left that fits. Not thread-safe: use one object per thread.
class ColoringSearch {
public:
    explicit ColoringSearch(const WeightedInstance &instance);

    std::optional<ColoringMap> solve(const CoverSigning &signing, SearchStats *stats = nullptr);

    const WeightedInstance &instance() const { return instance_; }
    const std::vector<Vertex> &order() const { return order_; }

private:
    struct Link {
        Vertex other;
        EdgeIndex edge;
    };

    bool assign(int depth);
    bool alive(Vertex w, Node b) const;
    void apply(Vertex v, Node a, std::vector<Vertex> &touched);
    void undo(Vertex v, Node a);
    void block_around(Vertex u, int delta, std::vector<Vertex> *touched);

    WeightedInstance instance_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Link>> links_;

    // per-solve state
    const CoverSigning *signing_ = nullptr;
    std::vector<std::int8_t> choice_; // -1 unassigned, else Node
    std::vector<int> defect_;
    std::vector<std::array<int, 2>> conf_;
    std::vector<std::array<int, 2>> blocked_;
    std::vector<std::vector<Vertex>> touched_stack_;
    std::uint64_t nodes_ = 0;
};

std::optional<ColoringMap> find_coloring(const WeightedInstance &instance, const CoverSigning &signing,
                                         SearchStats *stats = nullptr);

inline constexpr int kDefaultOracleCeiling = 20;

/// Tries all 2^n maps through check_coloring. Shares no pruning logic with
/// ColoringSearch.
std::optional<ColoringMap> brute_force_oracle(const WeightedInstance &instance, const CoverSigning &signing,
                                              int max_vertices = kDefaultOracleCeiling);

// ---------------------------------------------------------------------------
// Cover-space quantification

/// An indexable family of signings. Each index stands for `weight(index)`
/// concrete signings (1 unless the source enumerates symmetry classes).
/// fill() and weight() must be safe to call concurrently.
class SigningSource {
public:
    virtual ~SigningSource() = default;
    virtual std::uint64_t size() const = 0;
    virtual void fill(std::uint64_t index, CoverSigning &out) const = 0;
    virtual std::uint64_t weight(std::uint64_t) const { return 1; }
    virtual bool certifying() const { return true; }
};

/// All 2^|E| signings as a binary counter over canonical edge order,
/// edge 0 most significant, Parallel = 0.
class ExhaustiveSigningSource final : public SigningSource {
public:
    explicit ExhaustiveSigningSource(int edge_count);
    std::uint64_t size() const override;
    void fill(std::uint64_t index, CoverSigning &out) const override;

private:
    int edge_count_;
};

/// `count` signings drawn uniformly with std::mt19937_64 seeded by `seed`.
class SampledSigningSource final : public SigningSource {
public:
    SampledSigningSource(int edge_count, std::uint64_t count, std::uint64_t seed);
    std::uint64_t size() const override { return static_cast<std::uint64_t>(samples_.size()); }
    void fill(std::uint64_t index, CoverSigning &out) const override { out = samples_[index]; }
    bool certifying() const override { return false; }

private:
    std::vector<CoverSigning> samples_;
};

enum class CoverVerdict { ColorableForAll, WitnessFound };

struct AllCoversResult {
    CoverVerdict verdict = CoverVerdict::ColorableForAll;
    std::optional<CoverSigning> witness;
    std::optional<std::uint64_t> witness_index;
    /// Concrete signings covered (class weights summed), in source order up
    /// to and including the witness.
    std::uint64_t signings_examined = 0;
    std::uint64_t classes_examined = 0;
    std::uint64_t nodes_expanded = 0;
    /// False for sampled sources: a ColorableForAll verdict is then only
    /// evidence, not a proof.
    bool certifying = true;

    bool colorable() const { return verdict == CoverVerdict::ColorableForAll; }
};

struct CoverSearchOptions {
    unsigned workers = 0; ///< 0 = hardware concurrency
    int max_edges = 24;   ///< ceiling for exhaustive enumeration
};

/// Runs find_coloring over every signing of `source`. Work is split into
/// contiguous index chunks; the reported witness is the smallest index
/// without a valid map, and all counters are independent of worker count.
AllCoversResult search_covers(const WeightedInstance &instance, const SigningSource &source,
                              const CoverSearchOptions &options = {});

/// Exhaustive over all 2^|E| signings. Throws std::length_error above
/// options.max_edges.
AllCoversResult colorable_all_covers(const WeightedInstance &instance, const CoverSearchOptions &options = {});

/// Seeded random smoke test; count must be >= 1.
AllCoversResult sample_covers(const WeightedInstance &instance, std::uint64_t count, std::uint64_t seed,
                              const CoverSearchOptions &options = {});

} // namespace dpc
