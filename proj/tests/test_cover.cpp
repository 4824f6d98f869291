#include "lincycle/cover.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lincycle;

namespace {

LinearCycle cycle_of(std::vector<Edge> edges)
{
    return std::get<LinearCycle>(validate_cycle(EdgeSequence{std::move(edges)}));
}

OrientedPath oriented(std::vector<Edge> edges, VertexId start)
{
    return orient_path(std::get<LinearPath>(validate_path(edges)), start);
}

// Path {0,1,2},{2,3,4} with the extra triple {0,3,4}; no proper cycle
// contains {0,1,2}, so C is that edge alone and {3,4} turns red.
Hypergraph red_example(bool with_pair)
{
    std::vector<Edge> edges{Edge{0, 1, 2}, Edge{2, 3, 4}, Edge{0, 3, 4}};
    if (with_pair)
        edges.push_back(Edge{3, 4});
    return Hypergraph(5, edges);
}

} // namespace

TEST_CASE("base_case: examples")
{
    auto empty = base_case(Hypergraph(4, {}));
    REQUIRE(empty);
    CHECK(empty->alpha == 4);
    REQUIRE(empty->cycles.size() == 4);
    CHECK(empty->cycles[2] == LinearCycle::single_vertex(2));

    auto pair = base_case(Hypergraph(2, {Edge{0, 1}}));
    REQUIRE(pair);
    CHECK(pair->alpha == 1);
    CHECK(pair->cycles == std::vector<LinearCycle>{LinearCycle::single_edge(Edge{0, 1})});

    auto k5 = base_case(complete_pairs(5));
    REQUIRE(k5);
    CHECK(k5->alpha == 1);
    REQUIRE(k5->cycles.size() == 1);
    CHECK(k5->cycles[0].edges()
          == std::vector<Edge>{Edge{0, 1}, Edge{1, 2}, Edge{2, 3}, Edge{3, 4}, Edge{0, 4}});

    auto none = base_case(Hypergraph(0, {}));
    REQUIRE(none);
    CHECK(none->cycles.empty());

    CHECK_FALSE(base_case(Hypergraph(3, {Edge{0, 1, 2}})));
    CHECK_FALSE(base_case(complete_triples(4)));
}

TEST_CASE("base_case: complete graph plus triples is still alpha one")
{
    auto pairs = complete_pairs(4).edges();
    pairs.push_back(Edge{0, 1, 2});
    auto b = base_case(Hypergraph(4, pairs));
    REQUIRE(b);
    CHECK(b->alpha == 1);
    CHECK(b->cycles[0].vertices() == all_vertices(4));
}

TEST_CASE("build_red_edges and reduce")
{
    auto h = red_example(false);
    auto p = oriented({Edge{0, 1, 2}, Edge{2, 3, 4}}, 0);
    REQUIRE(p.v(2) == 3);
    REQUIRE(p.u(2) == VertexId{4});
    auto c = LinearCycle::single_edge(Edge{0, 1, 2});

    auto red = build_red_edges(h, p, c);
    CHECK(red.anchor == 0);
    CHECK(red.pairs == std::vector<Edge>{Edge{3, 4}});
    CHECK(red.origin.at(Edge{3, 4}) == Edge{0, 3, 4});

    auto r = reduce(h, c, red);
    CHECK(r.h_prime.num_vertices() == 2);
    CHECK(r.h_prime.edges() == std::vector<Edge>{Edge{0, 1}});
    CHECK(r.relabel == std::vector<VertexId>{3, 4});
    CHECK(r.red.contains(Edge{0, 1}));
    CHECK(r.red.origin.at(Edge{0, 1}) == Edge{0, 3, 4});

    // A cycle through v_k blocks the pair.
    auto through = build_red_edges(h, p, LinearCycle::single_edge(Edge{2, 3, 4}));
    CHECK(through.pairs.empty());
}

TEST_CASE("reduce: red pair that is already a 2-edge is lifted as red")
{
    auto h = red_example(true);
    auto p = oriented({Edge{0, 1, 2}, Edge{2, 3, 4}}, 0);
    auto c = LinearCycle::single_edge(Edge{0, 1, 2});
    auto r = reduce(h, c, build_red_edges(h, p, c));
    CHECK(r.h_prime.edges() == std::vector<Edge>{Edge{0, 1}});
    CHECK(r.red.contains(Edge{0, 1}));

    std::vector<LinearCycle> sub{LinearCycle::single_edge(Edge{0, 1})};
    auto lifted = lift(sub, r, c);
    CHECK(lifted.red_edges == 1);
    REQUIRE(lifted.cycles.size() == 2);
    CHECK(lifted.cycles[0] == LinearCycle::single_edge(Edge{0, 3, 4}));
    CHECK(lifted.cycles[1] == c);
}

TEST_CASE("lift: identity and degenerate cycles")
{
    ReducedInstance r;
    r.h_prime = Hypergraph(3, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}});
    r.relabel = {4, 5, 6};
    auto c = LinearCycle::single_vertex(0);

    std::vector<LinearCycle> cover{cycle_of({Edge{0, 1}, Edge{1, 2}, Edge{0, 2}})};
    auto lifted = lift(cover, r, c);
    CHECK(lifted.red_edges == 0);
    REQUIRE(lifted.cycles.size() == 2);
    CHECK(lifted.cycles[0] == cycle_of({Edge{4, 5}, Edge{5, 6}, Edge{4, 6}}));

    std::vector<LinearCycle> points{LinearCycle::single_vertex(1), LinearCycle::single_edge(Edge{0, 2})};
    auto moved = lift(points, r, c);
    CHECK(moved.cycles[0] == LinearCycle::single_vertex(5));
    CHECK(moved.cycles[1] == LinearCycle::single_edge(Edge{4, 6}));
    CHECK(moved.cycles[2] == c);

    CHECK(lift({}, r, c).cycles == std::vector<LinearCycle>{c});
}

TEST_CASE("lift: one red pair widens, two are an assertion failure")
{
    ReducedInstance r;
    r.h_prime = Hypergraph(3, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}});
    r.relabel = {1, 2, 3};
    r.red.anchor = 0;
    r.red.pairs = {Edge{0, 1}};
    r.red.origin.emplace(Edge{0, 1}, Edge{0, 1, 2});
    auto c = LinearCycle::single_vertex(0);
    std::vector<LinearCycle> cover{cycle_of({Edge{0, 1}, Edge{1, 2}, Edge{0, 2}})};

    auto one = lift(cover, r, c);
    CHECK(one.red_edges == 1);
    CHECK(one.cycles[0] == cycle_of({Edge{0, 1, 2}, Edge{2, 3}, Edge{1, 3}}));

    r.red.pairs.push_back(Edge{1, 2});
    r.red.origin.emplace(Edge{1, 2}, Edge{0, 2, 3});
    CHECK_THROWS_AS(lift(cover, r, c), AssertionFailure);
}

TEST_CASE("lift: widening that breaks linearity is an assertion failure")
{
    // The widened triple {1,2,3} meets both relabeled neighbours in two
    // vertices.
    ReducedInstance r;
    r.h_prime = Hypergraph(3, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}});
    r.relabel = {1, 2, 3};
    r.red.anchor = 9;
    r.red.pairs = {Edge{0, 1}};
    r.red.origin.emplace(Edge{0, 1}, Edge{1, 2, 3});
    std::vector<LinearCycle> cover{cycle_of({Edge{0, 1}, Edge{1, 2}, Edge{0, 2}})};
    CHECK_THROWS_AS(lift(cover, r, LinearCycle::single_vertex(0)), AssertionFailure);
}

TEST_CASE("solve: examples")
{
    auto k5 = solve(complete_pairs(5));
    REQUIRE(k5.cycles.size() == 1);
    CHECK(k5.alpha_bound == 1);
    CHECK(k5.stats.alpha_exact);

    auto empty = solve(Hypergraph(4, {}));
    CHECK(empty.cycles.size() == 4);
    CHECK(empty.alpha_bound == 4);

    auto single = solve(Hypergraph(3, {Edge{0, 1, 2}}));
    CHECK(single.cycles == std::vector<CycleCandidate>{EdgeCycle{Edge{0, 1, 2}}});
    CHECK(single.alpha_bound == 2);

    auto fano = solve(oracle::fano(), {{}, AssertLevel::Full});
    CHECK(fano.alpha_bound == 4);
    CHECK(fano.cycles.size() <= 4);
    CHECK(oracle::certificate_valid(oracle::fano(), fano.cycles));

    auto k53 = solve(complete_triples(5), {{}, AssertLevel::Full});
    CHECK(k53.alpha_bound == 2);
    CHECK(k53.cycles.size() <= 2);

    CHECK(solve(Hypergraph(0, {})).cycles.empty());
}

TEST_CASE("solve: inexact alpha above the threshold")
{
    SolveOptions opts;
    opts.exact_alpha_max_n = 3;
    auto cert = solve(oracle::fano(), opts);
    CHECK_FALSE(cert.stats.alpha_exact);
    CHECK(cert.alpha_bound == cert.cycles.size());
}

TEST_CASE("solve: budget exhaustion propagates")
{
    SolveOptions opts;
    opts.budget = SearchBudget(2, 10.0);
    CHECK_THROWS_AS(solve(complete_triples(7), opts), BudgetExhausted);
}

TEST_CASE("solve: deterministic")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        auto h = oracle::random_hypergraph(rng, 3 + rng() % 8, rng() % 25);
        CHECK(serialize_certificate(solve(h)) == serialize_certificate(solve(h)));
    }
}

TEST_CASE("solve: valid covers within alpha at full assertion level")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 10;
        auto h = oracle::random_hypergraph(rng, n, rng() % (4 * n + 1), 0.7);
        CoverCertificate cert;
        REQUIRE_NOTHROW(cert = solve(h, {{}, AssertLevel::Full}));
        CHECK(cert.alpha_bound == oracle::alpha_scan(h));
        CHECK(oracle::certificate_valid(h, cert.cycles));
    }
}
