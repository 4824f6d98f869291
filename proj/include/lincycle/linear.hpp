#pragma once

// Linear paths and linear cycles: consecutive hyperedges meet in exactly one
// vertex, nonconsecutive hyperedges are disjoint.

#include "lincycle/core.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace lincycle {

/// First broken rule found by a validator. Consecutive pairs are scanned
/// before nonconsecutive ones, each in increasing index order.
struct Violation
{
    enum class Kind {
        Empty,
        ConsecutiveIntersection, ///< consecutive edges share != 1 vertex
        NonconsecutiveOverlap,   ///< nonconsecutive edges share a vertex
        CycleTooShort,           ///< a cyclic sequence of exactly 2 edges
        RepeatedConnector,       ///< 3-edge cycle whose connectors coincide
    };

    Kind kind;
    std::size_t first = 0;
    std::size_t second = 0;
    std::size_t shared = 0; ///< size of the offending intersection

    std::string describe() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

template <typename T>
using Validated = std::variant<T, Violation>;

template <typename T>
bool is_valid(const Validated<T>& r) { return std::holds_alternative<T>(r); }

class LinearPath
{
public:
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t length() const { return edges_.size(); }
    const Edge& edge(std::size_t i) const { return edges_[i]; }
    VertexMask vertices() const { return vertices_; }

    /// The single vertex shared by edges i and i+1.
    VertexId connector(std::size_t i) const;

    /// Vertices of an end edge that are not connectors.
    VertexMask head_free() const;
    VertexMask tail_free() const;

    LinearPath reversed() const;
    /// Contiguous edges [first, first + count).
    LinearPath slice(std::size_t first, std::size_t count) const;

    friend bool operator==(const LinearPath&, const LinearPath&) = default;

private:
    friend Validated<LinearPath> validate_path(std::span<const Edge> edges);
    explicit LinearPath(std::vector<Edge> edges);

    std::vector<Edge> edges_;
    VertexMask vertices_ = 0;
};

Validated<LinearPath> validate_path(std::span<const Edge> edges);

/// Unchecked cycle shapes, as read from a certificate.
struct VertexCycle
{
    VertexId v;
    friend bool operator==(const VertexCycle&, const VertexCycle&) = default;
};
struct EdgeCycle
{
    Edge e;
    friend bool operator==(const EdgeCycle&, const EdgeCycle&) = default;
};
struct EdgeSequence
{
    std::vector<Edge> edges;
    friend bool operator==(const EdgeSequence&, const EdgeSequence&) = default;
};
using CycleCandidate = std::variant<VertexCycle, EdgeCycle, EdgeSequence>;

/// A linear cycle, including the degenerate single-vertex and single-edge
/// forms. Proper cycles hold at least 3 edges.
class LinearCycle
{
public:
    enum class Kind { SingleVertex, SingleEdge, Proper };

    static LinearCycle single_vertex(VertexId v);
    static LinearCycle single_edge(const Edge& e);

    Kind kind() const { return kind_; }
    bool is_proper() const { return kind_ == Kind::Proper; }
    /// Only meaningful for SingleVertex.
    VertexId vertex() const { return vertex_; }
    /// Empty for SingleVertex, one edge for SingleEdge.
    const std::vector<Edge>& edges() const { return edges_; }
    VertexMask vertices() const { return vertices_; }

    CycleCandidate candidate() const;
    std::string to_string() const;

    friend bool operator==(const LinearCycle&, const LinearCycle&) = default;

private:
    friend Validated<LinearCycle> validate_cycle(const CycleCandidate& c);
    LinearCycle(Kind kind, VertexId v, std::vector<Edge> edges);

    Kind kind_;
    VertexId vertex_ = 0;
    std::vector<Edge> edges_;
    VertexMask vertices_ = 0;
};

/// Length-1 sequences become SingleEdge; length 2 is always rejected.
Validated<LinearCycle> validate_cycle(const CycleCandidate& c);

/// A linear path read from a fixed start vertex v_0. Edge i is
/// {v_i, v_{i+1}} or {v_i, v_{i+1}, u_{i+1}}.
class OrientedPath
{
public:
    const LinearPath& path() const { return path_; }
    /// Index of the last edge (the path has last() + 1 edges).
    std::size_t last() const { return path_.length() - 1; }
    VertexId v0() const { return v_[0]; }
    /// v(i) for i in [0, last() + 1].
    VertexId v(std::size_t i) const { return v_[i]; }
    /// u(i) for i in [1, last() + 1]; empty when edge i-1 has size 2.
    std::optional<VertexId> u(std::size_t i) const { return u_[i]; }

    /// Rebuilds edge i from its labels alone.
    Edge labeled_edge(std::size_t i) const;

private:
    friend OrientedPath orient_path(const LinearPath& p, VertexId start);
    OrientedPath(LinearPath p, std::vector<VertexId> v, std::vector<std::optional<VertexId>> u);

    LinearPath path_;
    std::vector<VertexId> v_;
    std::vector<std::optional<VertexId>> u_;
};

/// Smallest vertex that may serve as v_0 (a non-connector of an end edge).
VertexId canonical_start(const LinearPath& p);

/// Orients p so that start is v_0. The remaining ties (v_1 vs u_1 on a
/// single-edge path, v_{l+1} vs u_{l+1}) go to the smaller id.
/// Throws std::invalid_argument if start is not an endpoint vertex.
OrientedPath orient_path(const LinearPath& p, VertexId start);

/// Edges h_0 .. h_j. Throws std::out_of_range if j > last().
LinearPath initial_segment(const OrientedPath& p, std::size_t j);

nlohmann::ordered_json to_json(const CycleCandidate& c);
nlohmann::ordered_json to_json(const LinearCycle& c);
/// Throws std::invalid_argument on a malformed encoding.
CycleCandidate cycle_from_json(const nlohmann::json& j);

} // namespace lincycle
