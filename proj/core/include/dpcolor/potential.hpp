#pragma once

// The (i, j, c)-potential: rho_c(v) = i - j + 1 + c1(v) + c2(v) and, for a
// vertex set S, rho(S) = sum of rho_c over S minus (i + 1) |E(G[S])|.
// Everything here is exact integer arithmetic.

#include <dpcolor/model.hpp>

#include <cstdint>
#include <vector>

namespace dpc {

/// Vertex subset of a graph with at most 64 vertices; bit v is vertex v.
using VertexMask = std::uint64_t;

std::vector<Vertex> mask_vertices(VertexMask mask);
VertexMask vertices_mask(const std::vector<Vertex> &vertices);

/// One adjacency bitmask per vertex. Requires n <= 64.
std::vector<VertexMask> adjacency_masks(const SimpleGraph &g);

int vertex_potential(const Capacity &c, const DefectParams &params);

int subset_potential(const WeightedInstance &instance, VertexMask subset);
int subset_potential(const WeightedInstance &instance, const std::vector<Vertex> &subset);
int total_potential(const WeightedInstance &instance);

inline constexpr int kDefaultSubsetCeiling = 24;

enum class SubsetMode { Nonempty, NonemptyProper };

struct PotentialReport {
    VertexMask subset = 0;
    int value = 0;
    SubsetMode mode = SubsetMode::Nonempty;
    bool whole_graph = false;
};

/// Total order used to pick among equal-potential subsets: smaller size
/// first, then lexicographically smaller sorted vertex list.
bool subset_precedes(VertexMask a, VertexMask b);

/// Exhaustive minimum over the requested subset family. Throws
/// std::length_error when n exceeds `max_vertices`, std::invalid_argument
/// when the family is empty.
PotentialReport min_potential_subset(const WeightedInstance &instance, SubsetMode mode,
                                     int max_vertices = kDefaultSubsetCeiling, unsigned workers = 0);

/// rho(A) + rho(B) - [rho(A u B) + rho(A n B) + (i+1)|E(A\B, B\A)|].
/// Always 0; computed term by term.
int check_submodularity(const WeightedInstance &instance, VertexMask a, VertexMask b);

struct SparsityResult {
    bool sparse = true;
    /// Subset with maximum excess (i+1)|E(S)| - ((2i+1)|S| + j - i); set
    /// only when dense.
    VertexMask witness = 0;
    int excess = 0;
};

/// Sparse iff (i+1)|E(G[S])| <= (2i+1)|S| + j - i for every nonempty S.
SparsityResult sparsity_test(const SimpleGraph &g, const DefectParams &params,
                             int max_vertices = kDefaultSubsetCeiling, unsigned workers = 0);

} // namespace dpc
