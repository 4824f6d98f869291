#pragma once

// Mixed hypergraphs: vertices are dense indices, edges have 2 or 3 vertices.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lincycle {

using VertexId = std::uint32_t;

/// Bit v is set iff vertex v belongs to the set.
using VertexMask = std::uint64_t;

/// Searches index vertex sets with one 64-bit word.
inline constexpr std::size_t kMaxVertices = 64;

constexpr VertexMask bit(VertexId v) { return VertexMask{1} << v; }
constexpr int count(VertexMask m) { return std::popcount(m); }
constexpr VertexMask all_vertices(std::size_t n)
{
    return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

std::vector<VertexId> to_vector(VertexMask m);

/// A hyperedge of size 2 or 3, vertices distinct and sorted ascending.
class Edge
{
public:
    /// Throws std::invalid_argument on wrong size or a repeated vertex.
    Edge(std::initializer_list<VertexId> vs);
    explicit Edge(std::span<const VertexId> vs);

    std::size_t size() const { return size_; }
    VertexId operator[](std::size_t i) const { return v_[i]; }
    const VertexId* begin() const { return v_.data(); }
    const VertexId* end() const { return v_.data() + size_; }
    VertexId max_vertex() const { return v_[size_ - 1]; }
    VertexMask mask() const;
    bool contains(VertexId v) const;

    friend bool operator==(const Edge& a, const Edge& b);
    friend std::strong_ordering operator<=>(const Edge& a, const Edge& b);

    std::string to_string() const;

private:
    void init(std::span<const VertexId> vs);

    std::array<VertexId, 3> v_{};
    std::uint8_t size_ = 0;
};

/// Builds an edge from a mask holding 2 or 3 bits.
Edge edge_from_mask(VertexMask m);

/// Immutable mixed hypergraph in canonical form: edges deduplicated and
/// sorted lexicographically, all vertices below n.
class Hypergraph
{
public:
    Hypergraph() = default;

    /// Canonicalizes; throws std::invalid_argument if n exceeds kMaxVertices
    /// or an edge leaves [0, n).
    Hypergraph(std::size_t n, std::vector<Edge> edges);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }
    VertexMask edge_mask(std::size_t i) const { return masks_[i]; }
    const std::vector<VertexMask>& edge_masks() const { return masks_; }
    VertexMask vertex_mask() const { return all_vertices(n_); }

    std::optional<std::size_t> find(const Edge& e) const;
    bool contains(const Edge& e) const { return find(e).has_value(); }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexMask> masks_;
};

class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string& what, std::size_t line);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Instance text: header `n m`, then m edge lines; `#` lines are comments.
Hypergraph parse_hypergraph(std::string_view text);
std::string serialize(const Hypergraph& h);

struct InducedSubgraph
{
    Hypergraph graph;
    /// to_parent[i] is the parent id of child vertex i.
    std::vector<VertexId> to_parent;
};

/// Edges of h lying entirely inside keep, relabeled densely in id order.
InducedSubgraph induced_sub(const Hypergraph& h, VertexMask keep);

/// Canonical union of h's edges and extra; throws std::invalid_argument
/// naming the index into extra of an out-of-range edge.
Hypergraph add_edges(const Hypergraph& h, std::span<const Edge> extra);

/// Complete 3-uniform hypergraph on n vertices.
Hypergraph complete_triples(std::size_t n);

/// Complete graph on n vertices (all 2-edges).
Hypergraph complete_pairs(std::size_t n);

} // namespace lincycle
