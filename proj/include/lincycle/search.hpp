#pragma once

// Exact exponential searches used by the cover construction and its tests.
// All of them are deterministic: ties break on canonical edge index order.

#include "lincycle/budget.hpp"
#include "lincycle/core.hpp"
#include "lincycle/linear.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lincycle {

/// A vertex set containing no edge of its hypergraph.
struct IndependentSet
{
    VertexMask vertices = 0;
    std::size_t size() const { return static_cast<std::size_t>(count(vertices)); }
};

struct AlphaResult
{
    std::size_t value = 0;
    IndependentSet witness;
    std::uint64_t nodes = 0;
};

/// Independence number by include/exclude branching on the vertex with the
/// most live edges; vertices without live edges are taken for free.
AlphaResult alpha(const Hypergraph& h, const SearchBudget& budget = {});

struct LongestPathResult
{
    /// Empty iff h has no edges.
    std::optional<LinearPath> path;
    std::uint64_t nodes = 0;
};

/// A linear path with the most edges; among those, the lexicographically
/// smallest sequence of edge indices.
LongestPathResult longest_linear_path(const Hypergraph& h, const SearchBudget& budget = {});

struct SegmentCycle
{
    LinearCycle cycle;
    /// Largest j such that the cycle holds h_0 .. h_j consecutively.
    std::size_t segment_end = 0;
    /// True when no proper cycle contains h_0 and the cycle is h_0 itself.
    bool degenerate = false;
    std::uint64_t nodes = 0;
};

/// Proper linear cycle of h holding the longest possible initial segment of
/// p, trying j = l, l-1, ..., 0 and closing each block h_0..h_j by
/// depth-first extension from its free end. Falls back to SingleEdge(h_0).
/// Throws std::invalid_argument if a path edge is not an edge of h.
SegmentCycle best_cycle_for_initial_segment(const Hypergraph& h, const OrientedPath& p,
                                            const SearchBudget& budget = {});

struct CoverOracleResult
{
    std::size_t value = 0;
    std::vector<LinearCycle> witness;
    std::uint64_t nodes = 0;
};

/// Minimum number of pairwise edge-disjoint linear cycles (degenerate forms
/// allowed) covering V(h). Enumerates every proper cycle, so it is meant
/// for n <= 8; throws std::invalid_argument above 10 vertices.
CoverOracleResult min_cycle_cover_oracle(const Hypergraph& h, const SearchBudget& budget = {});

} // namespace lincycle
