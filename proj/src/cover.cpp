#include "lincycle/cover.hpp"

#include "lincycle/search.hpp"

#include <algorithm>
#include <set>

namespace lincycle {

std::optional<BaseCase> base_case(const Hypergraph& h)
{
    const std::size_t n = h.num_vertices();
    auto singletons = [n] {
        std::vector<LinearCycle> out;
        for (VertexId v = 0; v < n; ++v)
            out.push_back(LinearCycle::single_vertex(v));
        return out;
    };

    if (n <= 2) {
        if (n == 2 && h.contains(Edge{0, 1}))
            return BaseCase{{LinearCycle::single_edge(Edge{0, 1})}, 1};
        return BaseCase{singletons(), n};
    }
    if (h.num_edges() == 0)
        return BaseCase{singletons(), n};

    // alpha = 1 exactly when no pair of vertices is independent.
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            if (!h.contains(Edge{a, b}))
                return std::nullopt;

    EdgeSequence ham;
    for (VertexId v = 0; v < n; ++v)
        ham.edges.push_back(Edge{v, static_cast<VertexId>((v + 1) % n)});
    auto cycle = validate_cycle(ham);
    return BaseCase{{std::get<LinearCycle>(cycle)}, 1};
}

RedEdgeSet build_red_edges(const Hypergraph& h, const OrientedPath& p, const LinearCycle& c)
{
    RedEdgeSet red;
    red.anchor = p.v0();
    const VertexMask on_cycle = c.vertices();
    for (std::size_t k = 1; k <= p.last() + 1; ++k) {
        auto u = p.u(k);
        if (!u)
            continue;
        const VertexId x = p.v(k);
        if ((bit(x) | bit(*u)) & on_cycle)
            continue;
        const Edge triple{red.anchor, x, *u};
        if (!h.contains(triple))
            continue;
        const Edge pair{x, *u};
        red.pairs.push_back(pair);
        red.origin.emplace(pair, triple);
    }
    std::sort(red.pairs.begin(), red.pairs.end());
    return red;
}

ReducedInstance reduce(const Hypergraph& h, const LinearCycle& c, const RedEdgeSet& r)
{
    auto sub = induced_sub(h, h.vertex_mask() & ~c.vertices());
    std::vector<VertexId> to_child(h.num_vertices(), 0);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
        to_child[sub.to_parent[i]] = static_cast<VertexId>(i);

    ReducedInstance out;
    out.red.anchor = r.anchor;
    for (const Edge& pair : r.pairs) {
        Edge child{to_child[pair[0]], to_child[pair[1]]};
        out.red.pairs.push_back(child);
        out.red.origin.emplace(child, r.origin.at(pair));
    }
    std::sort(out.red.pairs.begin(), out.red.pairs.end());
    out.h_prime = add_edges(sub.graph, out.red.pairs);
    out.relabel = std::move(sub.to_parent);
    return out;
}

namespace {

Edge relabel_edge(const Edge& e, const std::vector<VertexId>& to_parent)
{
    std::array<VertexId, 3> vs{};
    for (std::size_t i = 0; i < e.size(); ++i)
        vs[i] = to_parent[e[i]];
    return Edge(std::span<const VertexId>(vs.data(), e.size()));
}

} // namespace

Lifted lift(std::span<const LinearCycle> cover, const ReducedInstance& reduced,
            const LinearCycle& c)
{
    Lifted out;
    for (std::size_t i = 0; i < cover.size(); ++i) {
        const LinearCycle& cycle = cover[i];
        if (cycle.kind() == LinearCycle::Kind::SingleVertex) {
            out.cycles.push_back(LinearCycle::single_vertex(reduced.relabel.at(cycle.vertex())));
            continue;
        }
        std::size_t red_here = 0;
        std::vector<Edge> edges;
        for (const Edge& e : cycle.edges()) {
            auto it = reduced.red.origin.find(e);
            if (it != reduced.red.origin.end()) {
                ++red_here;
                edges.push_back(it->second);
            } else {
                edges.push_back(relabel_edge(e, reduced.relabel));
            }
        }
        if (red_here > 1)
            throw AssertionFailure("cycle " + cycle.to_string() + " of the reduced instance holds "
                                   + std::to_string(red_here) + " red edges");
        out.red_edges += red_here;
        auto lifted = validate_cycle(EdgeSequence{std::move(edges)});
        if (!is_valid(lifted))
            throw AssertionFailure("lifted cycle is not linear: "
                                   + std::get<Violation>(lifted).describe());
        out.cycles.push_back(std::get<LinearCycle>(std::move(lifted)));
    }
    out.cycles.push_back(c);
    return out;
}

namespace {

void check_cover(const Hypergraph& h, const std::vector<LinearCycle>& cycles, std::size_t depth)
{
    const std::string where = " at depth " + std::to_string(depth);
    VertexMask covered = 0;
    std::set<Edge> seen;
    for (const auto& c : cycles) {
        covered |= c.vertices();
        for (const Edge& e : c.edges()) {
            if (!h.contains(e))
                throw AssertionFailure("cover uses non-edge " + e.to_string() + where);
            if (!seen.insert(e).second)
                throw AssertionFailure("edge " + e.to_string() + " used twice" + where);
        }
    }
    if (covered != h.vertex_mask())
        throw AssertionFailure("cover misses vertices" + where);
}

class Solver
{
public:
    explicit Solver(const SolveOptions& options) : options_(options) {}

    std::vector<LinearCycle> run(const Hypergraph& h, std::size_t depth,
                                 std::optional<std::size_t> known_alpha)
    {
        stats_.recursion_depth = std::max(stats_.recursion_depth, depth);
        const bool cheap = options_.level != AssertLevel::None;
        const bool full = options_.level == AssertLevel::Full;

        if (auto base = base_case(h)) {
            if (full && known_alpha && *known_alpha != base->alpha)
                throw AssertionFailure("base case alpha " + std::to_string(base->alpha)
                                       + " disagrees with search alpha "
                                       + std::to_string(*known_alpha));
            if (cheap)
                check_cover(h, base->cycles, depth);
            return std::move(base->cycles);
        }

        auto longest = longest_linear_path(h, options_.budget);
        stats_.search_nodes += longest.nodes;
        const LinearPath& path = *longest.path;
        const OrientedPath oriented = orient_path(path, canonical_start(path));

        auto segment = best_cycle_for_initial_segment(h, oriented, options_.budget);
        stats_.search_nodes += segment.nodes;

        const RedEdgeSet red = build_red_edges(h, oriented, segment.cycle);
        const ReducedInstance reduced = reduce(h, segment.cycle, red);
        if (reduced.h_prime.num_vertices() >= h.num_vertices())
            throw AssertionFailure("reduction did not remove any vertex");

        std::optional<std::size_t> alpha_prime;
        if (full) {
            std::size_t a = known_alpha ? *known_alpha : compute_alpha(h);
            alpha_prime = compute_alpha(reduced.h_prime);
            if (*alpha_prime + 1 > a)
                throw AssertionFailure("independence number did not drop at depth "
                                       + std::to_string(depth) + ": " + std::to_string(a)
                                       + " -> " + std::to_string(*alpha_prime));
        }

        auto sub = run(reduced.h_prime, depth + 1, alpha_prime);
        Lifted lifted = lift(sub, reduced, segment.cycle);
        stats_.red_edges_lifted += lifted.red_edges;
        if (cheap)
            check_cover(h, lifted.cycles, depth);
        return std::move(lifted.cycles);
    }

    std::size_t compute_alpha(const Hypergraph& h)
    {
        auto r = alpha(h, options_.budget);
        stats_.search_nodes += r.nodes;
        return r.value;
    }

    CoverStats& stats() { return stats_; }

private:
    const SolveOptions& options_;
    CoverStats stats_;
};

} // namespace

CoverCertificate solve(const Hypergraph& h, const SolveOptions& options)
{
    Solver solver(options);
    std::optional<std::size_t> exact;
    if (h.num_vertices() <= options.exact_alpha_max_n)
        exact = solver.compute_alpha(h);
    auto cycles = solver.run(h, 0, exact);

    CoverCertificate cert;
    cert.instance = h;
    for (const auto& c : cycles)
        cert.cycles.push_back(c.candidate());

    if (exact) {
        cert.alpha_bound = *exact;
        solver.stats().alpha_exact = true;
        if (options.level != AssertLevel::None && cycles.size() > *exact)
            throw AssertionFailure("cover of size " + std::to_string(cycles.size())
                                   + " exceeds alpha " + std::to_string(*exact));
    } else {
        cert.alpha_bound = cycles.size();
    }
    cert.stats = solver.stats();
    return cert;
}

} // namespace lincycle
