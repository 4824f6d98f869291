#include "lincycle/linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace lincycle {

std::string Violation::describe() const
{
    switch (kind) {
    case Kind::Empty:
        return "empty edge sequence";
    case Kind::ConsecutiveIntersection:
        return "consecutive edges " + std::to_string(first) + " and " + std::to_string(second)
               + " share " + std::to_string(shared) + " vertices (expected exactly 1)";
    case Kind::NonconsecutiveOverlap:
        return "nonconsecutive edges " + std::to_string(first) + " and "
               + std::to_string(second) + " share " + std::to_string(shared) + " vertices";
    case Kind::CycleTooShort:
        return "cyclic sequence of 2 edges cannot meet in exactly one vertex on both sides";
    case Kind::RepeatedConnector:
        return "connectors " + std::to_string(first) + " and " + std::to_string(second)
               + " are the same vertex";
    }
    return "unknown violation";
}

namespace {

std::optional<Violation> check_sequence(std::span<const Edge> edges, bool cyclic)
{
    const std::size_t len = edges.size();
    std::vector<VertexMask> m(len);
    for (std::size_t i = 0; i < len; ++i)
        m[i] = edges[i].mask();

    const std::size_t consecutive_pairs = cyclic ? len : len - 1;
    for (std::size_t i = 0; i < consecutive_pairs; ++i) {
        std::size_t j = (i + 1) % len;
        int shared = count(m[i] & m[j]);
        if (shared != 1)
            return Violation{Violation::Kind::ConsecutiveIntersection, i, j,
                             static_cast<std::size_t>(shared)};
    }
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 2; j < len; ++j) {
            if (cyclic && i == 0 && j == len - 1)
                continue;
            int shared = count(m[i] & m[j]);
            if (shared != 0)
                return Violation{Violation::Kind::NonconsecutiveOverlap, i, j,
                                 static_cast<std::size_t>(shared)};
        }
    }
    return std::nullopt;
}

} // namespace

LinearPath::LinearPath(std::vector<Edge> edges) : edges_(std::move(edges))
{
    for (const Edge& e : edges_)
        vertices_ |= e.mask();
}

VertexId LinearPath::connector(std::size_t i) const
{
    VertexMask shared = edges_.at(i).mask() & edges_.at(i + 1).mask();
    return static_cast<VertexId>(std::countr_zero(shared));
}

VertexMask LinearPath::head_free() const
{
    VertexMask m = edges_.front().mask();
    if (edges_.size() > 1)
        m &= ~edges_[1].mask();
    return m;
}

VertexMask LinearPath::tail_free() const
{
    VertexMask m = edges_.back().mask();
    if (edges_.size() > 1)
        m &= ~edges_[edges_.size() - 2].mask();
    return m;
}

LinearPath LinearPath::reversed() const
{
    return LinearPath(std::vector<Edge>(edges_.rbegin(), edges_.rend()));
}

LinearPath LinearPath::slice(std::size_t first, std::size_t count) const
{
    if (count == 0 || first + count > edges_.size())
        throw std::out_of_range("path slice out of range");
    return LinearPath(std::vector<Edge>(edges_.begin() + first, edges_.begin() + first + count));
}

Validated<LinearPath> validate_path(std::span<const Edge> edges)
{
    if (edges.empty())
        return Violation{Violation::Kind::Empty};
    if (auto v = check_sequence(edges, false))
        return *v;
    return LinearPath(std::vector<Edge>(edges.begin(), edges.end()));
}

LinearCycle::LinearCycle(Kind kind, VertexId v, std::vector<Edge> edges)
    : kind_(kind), vertex_(v), edges_(std::move(edges))
{
    if (kind_ == Kind::SingleVertex)
        vertices_ = bit(vertex_);
    for (const Edge& e : edges_)
        vertices_ |= e.mask();
}

LinearCycle LinearCycle::single_vertex(VertexId v)
{
    return LinearCycle(Kind::SingleVertex, v, {});
}

LinearCycle LinearCycle::single_edge(const Edge& e)
{
    return LinearCycle(Kind::SingleEdge, 0, {e});
}

CycleCandidate LinearCycle::candidate() const
{
    switch (kind_) {
    case Kind::SingleVertex:
        return VertexCycle{vertex_};
    case Kind::SingleEdge:
        return EdgeCycle{edges_.front()};
    case Kind::Proper:
        break;
    }
    return EdgeSequence{edges_};
}

std::string LinearCycle::to_string() const
{
    if (kind_ == Kind::SingleVertex)
        return "(" + std::to_string(vertex_) + ")";
    std::string s;
    for (const Edge& e : edges_)
        s += e.to_string();
    return kind_ == Kind::Proper ? "[" + s + "]" : s;
}

Validated<LinearCycle> validate_cycle(const CycleCandidate& c)
{
    if (auto* vc = std::get_if<VertexCycle>(&c))
        return LinearCycle::single_vertex(vc->v);
    if (auto* ec = std::get_if<EdgeCycle>(&c))
        return LinearCycle::single_edge(ec->e);

    const auto& edges = std::get<EdgeSequence>(c).edges;
    switch (edges.size()) {
    case 0:
        return Violation{Violation::Kind::Empty};
    case 1:
        return LinearCycle::single_edge(edges.front());
    case 2:
        return Violation{Violation::Kind::CycleTooShort, 0, 1,
                         static_cast<std::size_t>(count(edges[0].mask() & edges[1].mask()))};
    default:
        break;
    }
    if (auto v = check_sequence(edges, true))
        return *v;
    // With three edges every pair is consecutive, so disjointness does not
    // force the connectors apart.
    if (edges.size() == 3) {
        VertexMask c01 = edges[0].mask() & edges[1].mask();
        VertexMask c12 = edges[1].mask() & edges[2].mask();
        VertexMask c20 = edges[2].mask() & edges[0].mask();
        if (c01 == c12 || c12 == c20 || c01 == c20)
            return Violation{Violation::Kind::RepeatedConnector, 0, 1, 1};
    }
    return LinearCycle(LinearCycle::Kind::Proper, 0, edges);
}

OrientedPath::OrientedPath(LinearPath p, std::vector<VertexId> v,
                           std::vector<std::optional<VertexId>> u)
    : path_(std::move(p)), v_(std::move(v)), u_(std::move(u))
{
}

Edge OrientedPath::labeled_edge(std::size_t i) const
{
    if (u_[i + 1])
        return Edge{v_[i], v_[i + 1], *u_[i + 1]};
    return Edge{v_[i], v_[i + 1]};
}

VertexId canonical_start(const LinearPath& p)
{
    return static_cast<VertexId>(std::countr_zero(p.head_free() | p.tail_free()));
}

OrientedPath orient_path(const LinearPath& p, VertexId start)
{
    LinearPath path = p;
    if (start >= kMaxVertices)
        throw std::invalid_argument("start vertex out of range");
    if (!(p.head_free() & bit(start))) {
        if (!(p.tail_free() & bit(start)))
            throw std::invalid_argument("vertex " + std::to_string(start)
                                        + " is not an endpoint of the path");
        path = p.reversed();
    }

    const std::size_t last = path.length() - 1;
    std::vector<VertexId> v(last + 2);
    std::vector<std::optional<VertexId>> u(last + 2);
    v[0] = start;
    for (std::size_t i = 0; i < last; ++i) {
        v[i + 1] = path.connector(i);
        VertexMask rest = path.edge(i).mask() & ~bit(v[i]) & ~bit(v[i + 1]);
        if (rest)
            u[i + 1] = static_cast<VertexId>(std::countr_zero(rest));
    }
    auto rest = to_vector(path.edge(last).mask() & ~bit(v[last]));
    v[last + 1] = rest[0];
    if (rest.size() == 2)
        u[last + 1] = rest[1];
    return OrientedPath(std::move(path), std::move(v), std::move(u));
}

LinearPath initial_segment(const OrientedPath& p, std::size_t j)
{
    if (j > p.last())
        throw std::out_of_range("initial segment index " + std::to_string(j)
                                + " exceeds path length");
    return p.path().slice(0, j + 1);
}

namespace {

nlohmann::ordered_json edge_json(const Edge& e)
{
    auto a = nlohmann::ordered_json::array();
    for (VertexId v : e)
        a.push_back(v);
    return a;
}

Edge edge_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("edge must be an array of vertex ids");
    std::vector<VertexId> vs;
    for (const auto& x : j) {
        if (!x.is_number_unsigned())
            throw std::invalid_argument("vertex id must be a non-negative integer");
        auto v = x.get<std::uint64_t>();
        if (v >= kMaxVertices)
            throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
        vs.push_back(static_cast<VertexId>(v));
    }
    return Edge(std::span<const VertexId>(vs));
}

} // namespace

nlohmann::ordered_json to_json(const CycleCandidate& c)
{
    nlohmann::ordered_json j;
    if (auto* vc = std::get_if<VertexCycle>(&c)) {
        j["kind"] = "vertex";
        j["v"] = vc->v;
    } else if (auto* ec = std::get_if<EdgeCycle>(&c)) {
        j["kind"] = "edge";
        j["e"] = edge_json(ec->e);
    } else {
        j["kind"] = "cycle";
        auto edges = nlohmann::ordered_json::array();
        for (const Edge& e : std::get<EdgeSequence>(c).edges)
            edges.push_back(edge_json(e));
        j["edges"] = std::move(edges);
    }
    return j;
}

nlohmann::ordered_json to_json(const LinearCycle& c) { return to_json(c.candidate()); }

CycleCandidate cycle_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("cycle must be an object with a string \"kind\"");
    const auto kind = j["kind"].get<std::string>();
    if (kind == "vertex") {
        if (!j.contains("v") || !j["v"].is_number_unsigned())
            throw std::invalid_argument("vertex cycle needs a non-negative \"v\"");
        auto v = j["v"].get<std::uint64_t>();
        if (v >= kMaxVertices)
            throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
        return VertexCycle{static_cast<VertexId>(v)};
    }
    if (kind == "edge") {
        if (!j.contains("e"))
            throw std::invalid_argument("edge cycle needs \"e\"");
        return EdgeCycle{edge_from_json(j["e"])};
    }
    if (kind == "cycle") {
        if (!j.contains("edges") || !j["edges"].is_array())
            throw std::invalid_argument("cycle needs an \"edges\" array");
        EdgeSequence seq;
        for (const auto& e : j["edges"])
            seq.edges.push_back(edge_from_json(e));
        return seq;
    }
    throw std::invalid_argument("unknown cycle kind \"" + kind + "\"");
}

} // namespace lincycle
