#pragma once

// Covering V(H) by at most alpha(H) edge-disjoint linear cycles.
//
// Each step takes a longest linear path P oriented from v_0, a cycle C
// holding the longest possible initial segment of P, and the red pairs
// {v_k, u_k} of path vertices off C whose triple {v_0, v_k, u_k} is an
// edge. The rest of the instance plus the red pairs (as 2-edges) is solved
// recursively; every red pair used by a returned cycle is widened back to
// its triple through v_0, and C is appended.

#include "lincycle/budget.hpp"
#include "lincycle/certificate.hpp"
#include "lincycle/core.hpp"
#include "lincycle/linear.hpp"

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace lincycle {

enum class AssertLevel {
    None,  ///< no internal checks
    Cheap, ///< structural checks on every level and on the final cover
    Full,  ///< Cheap plus an exact alpha drop check on every level
};

/// An internal invariant of the construction failed. This indicates a bug.
class AssertionFailure : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

struct RedEdgeSet
{
    /// v_0, in the coordinates of the instance the pairs were built for.
    VertexId anchor = 0;
    /// Sorted unordered pairs, stored as 2-edges.
    std::vector<Edge> pairs;
    /// pair -> the triple {v_0, x, y} it stands for, in parent coordinates.
    std::map<Edge, Edge> origin;

    bool contains(const Edge& e) const { return origin.count(e) != 0; }
};

struct ReducedInstance
{
    /// V(H) \ V(C), relabeled densely, with edges E(H \ C) plus red pairs.
    Hypergraph h_prime;
    /// Pairs in h_prime coordinates; anchor and origin stay in parent ones.
    RedEdgeSet red;
    /// relabel[i] is the parent vertex of h_prime vertex i.
    std::vector<VertexId> relabel;
};

struct BaseCase
{
    std::vector<LinearCycle> cycles;
    std::size_t alpha = 0;
};

/// Instances solved directly: at most two vertices, no edges, or every
/// pair of vertices a 2-edge (alpha = 1, covered by a Hamiltonian cycle
/// 0-1-...-(n-1)-0).
std::optional<BaseCase> base_case(const Hypergraph& h);

RedEdgeSet build_red_edges(const Hypergraph& h, const OrientedPath& p, const LinearCycle& c);

ReducedInstance reduce(const Hypergraph& h, const LinearCycle& c, const RedEdgeSet& r);

struct Lifted
{
    std::vector<LinearCycle> cycles;
    std::size_t red_edges = 0;
};

/// Moves a cover of reduced.h_prime back to the parent instance and appends
/// c. Throws AssertionFailure if a cycle carries two red pairs or stops
/// being a linear cycle after widening.
Lifted lift(std::span<const LinearCycle> cover, const ReducedInstance& reduced,
            const LinearCycle& c);

struct SolveOptions
{
    SearchBudget budget;
    AssertLevel level = AssertLevel::Cheap;
    /// alpha_bound is exact up to this many vertices; above it the cover
    /// size itself is reported.
    std::size_t exact_alpha_max_n = 24;
};

/// Throws BudgetExhausted or AssertionFailure.
CoverCertificate solve(const Hypergraph& h, const SolveOptions& options = {});

} // namespace lincycle
