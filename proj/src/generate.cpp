#include "lincycle/generate.hpp"

#include <random>
#include <stdexcept>

namespace lincycle {

namespace {

bool draw(std::mt19937_64& rng, double p)
{
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u < p;
}

} // namespace

Hypergraph generate(const GenSpec& spec)
{
    if (!(spec.p2 >= 0.0 && spec.p2 <= 1.0) || !(spec.p3 >= 0.0 && spec.p3 <= 1.0))
        throw std::invalid_argument("edge probabilities must lie in [0, 1]");
    if (spec.n > kMaxVertices)
        throw std::invalid_argument("too many vertices");

    std::mt19937_64 rng(spec.seed);
    const auto n = static_cast<VertexId>(spec.n);
    std::vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            for (VertexId c = b + 1; c < n; ++c)
                if (draw(rng, spec.p3))
                    edges.push_back(Edge{a, b, c});
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            if (draw(rng, spec.p2))
                edges.push_back(Edge{a, b});
    return Hypergraph(spec.n, std::move(edges));
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace lincycle
