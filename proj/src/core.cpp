#include "lincycle/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace lincycle {

std::vector<VertexId> to_vector(VertexMask m)
{
    std::vector<VertexId> out;
    out.reserve(count(m));
    while (m) {
        out.push_back(static_cast<VertexId>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

Edge::Edge(std::initializer_list<VertexId> vs)
{
    init(std::span<const VertexId>(vs.begin(), vs.size()));
}

Edge::Edge(std::span<const VertexId> vs) { init(vs); }

void Edge::init(std::span<const VertexId> vs)
{
    if (vs.size() != 2 && vs.size() != 3)
        throw std::invalid_argument("edge size must be 2 or 3, got "
                                    + std::to_string(vs.size()));
    size_ = static_cast<std::uint8_t>(vs.size());
    std::copy(vs.begin(), vs.end(), v_.begin());
    std::sort(v_.begin(), v_.begin() + size_);
    if (std::adjacent_find(v_.begin(), v_.begin() + size_) != v_.begin() + size_)
        throw std::invalid_argument("repeated vertex within edge");
}

VertexMask Edge::mask() const
{
    VertexMask m = 0;
    for (VertexId v : *this)
        m |= bit(v);
    return m;
}

bool Edge::contains(VertexId v) const
{
    return std::find(begin(), end(), v) != end();
}

bool operator==(const Edge& a, const Edge& b)
{
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

std::strong_ordering operator<=>(const Edge& a, const Edge& b)
{
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string Edge::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < size_; ++i) {
        if (i)
            s += ',';
        s += std::to_string(v_[i]);
    }
    return s + "}";
}

Edge edge_from_mask(VertexMask m)
{
    auto vs = to_vector(m);
    return Edge(std::span<const VertexId>(vs));
}

Hypergraph::Hypergraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges))
{
    if (n_ > kMaxVertices)
        throw std::invalid_argument("at most " + std::to_string(kMaxVertices)
                                    + " vertices supported, got " + std::to_string(n_));
    for (const Edge& e : edges_)
        if (e.max_vertex() >= n_)
            throw std::invalid_argument("edge " + e.to_string() + " has a vertex >= n="
                                        + std::to_string(n_));
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    masks_.reserve(edges_.size());
    for (const Edge& e : edges_)
        masks_.push_back(e.mask());
}

std::optional<std::size_t> Hypergraph::find(const Edge& e) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(what + ", line " + std::to_string(line)), line_(line)
{
}

namespace {

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<std::uint64_t> to_uint(std::string_view tok)
{
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        return std::nullopt;
    return v;
}

} // namespace

Hypergraph parse_hypergraph(std::string_view text)
{
    std::size_t lineno = 0;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
    std::vector<Edge> edges;
    std::size_t edge_lines = 0;

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;

        auto toks = tokens(line);
        if (toks.empty() || toks.front().front() == '#')
            continue;

        std::vector<std::uint64_t> nums;
        for (auto t : toks) {
            auto v = to_uint(t);
            if (!v)
                throw ParseError("malformed line: expected non-negative integers", lineno);
            nums.push_back(*v);
        }

        if (!header) {
            if (nums.size() != 2)
                throw ParseError("malformed header: expected `n m`", lineno);
            if (nums[0] > kMaxVertices)
                throw ParseError("vertex count " + std::to_string(nums[0])
                                     + " exceeds the supported maximum "
                                     + std::to_string(kMaxVertices),
                                 lineno);
            header = {nums[0], nums[1]};
            continue;
        }

        if (edge_lines == header->second)
            throw ParseError("more edge lines than the declared "
                                 + std::to_string(header->second),
                             lineno);
        ++edge_lines;
        if (nums.size() != 2 && nums.size() != 3)
            throw ParseError("edge size must be 2 or 3, got " + std::to_string(nums.size()),
                             lineno);
        for (auto v : nums)
            if (v >= header->first)
                throw ParseError("vertex index " + std::to_string(v) + " >= n="
                                     + std::to_string(header->first),
                                 lineno);
        std::vector<VertexId> vs(nums.begin(), nums.end());
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            throw ParseError("repeated vertex within edge", lineno);
        edges.emplace_back(std::span<const VertexId>(vs));
    }

    if (!header)
        throw ParseError("missing header `n m`", lineno == 0 ? 1 : lineno);
    if (edge_lines != header->second)
        throw ParseError("expected " + std::to_string(header->second) + " edge lines, found "
                             + std::to_string(edge_lines),
                         lineno);
    return Hypergraph(header->first, std::move(edges));
}

std::string serialize(const Hypergraph& h)
{
    std::ostringstream os;
    os << h.num_vertices() << ' ' << h.num_edges() << '\n';
    for (const Edge& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            os << (i ? " " : "") << e[i];
        os << '\n';
    }
    return os.str();
}

InducedSubgraph induced_sub(const Hypergraph& h, VertexMask keep)
{
    keep &= h.vertex_mask();
    InducedSubgraph out;
    out.to_parent = to_vector(keep);
    std::vector<VertexId> to_child(h.num_vertices(), 0);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        to_child[out.to_parent[i]] = static_cast<VertexId>(i);

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
        if ((h.edge_mask(i) & ~keep) != 0)
            continue;
        std::array<VertexId, 3> vs{};
        const Edge& e = h.edge(i);
        for (std::size_t k = 0; k < e.size(); ++k)
            vs[k] = to_child[e[k]];
        edges.emplace_back(std::span<const VertexId>(vs.data(), e.size()));
    }
    out.graph = Hypergraph(out.to_parent.size(), std::move(edges));
    return out;
}

Hypergraph add_edges(const Hypergraph& h, std::span<const Edge> extra)
{
    std::vector<Edge> edges = h.edges();
    for (std::size_t i = 0; i < extra.size(); ++i) {
        if (extra[i].max_vertex() >= h.num_vertices())
            throw std::invalid_argument("extra edge " + std::to_string(i) + " "
                                        + extra[i].to_string() + " out of range for n="
                                        + std::to_string(h.num_vertices()));
        edges.push_back(extra[i]);
    }
    return Hypergraph(h.num_vertices(), std::move(edges));
}

Hypergraph complete_triples(std::size_t n)
{
    std::vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            for (VertexId c = b + 1; c < n; ++c)
                edges.push_back(Edge{a, b, c});
    return Hypergraph(n, std::move(edges));
}

Hypergraph complete_pairs(std::size_t n)
{
    std::vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            edges.push_back(Edge{a, b});
    return Hypergraph(n, std::move(edges));
}

} // namespace lincycle
