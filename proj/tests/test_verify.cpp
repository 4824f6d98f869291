#include "lincycle/cover.hpp"
#include "lincycle/verify.hpp"
#include "mutations.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lincycle;

namespace {

CoverCertificate cert_for(const Hypergraph& h, std::vector<CycleCandidate> cycles, std::size_t bound)
{
    CoverCertificate c;
    c.instance = h;
    c.cycles = std::move(cycles);
    c.alpha_bound = bound;
    return c;
}

} // namespace

TEST_CASE("verify: single edge certificate passes every check")
{
    Hypergraph h(3, {Edge{0, 1, 2}});
    auto report = verify(h, cert_for(h, {EdgeCycle{Edge{0, 1, 2}}}, 2), AlphaMode::Compute);
    CHECK(report.ok);
    REQUIRE(report.checks.size() == 5);
    for (const auto& c : report.checks) {
        CHECK(c.passed);
        CHECK_FALSE(c.skipped);
    }
    CHECK(report.checks[0].name == "cycle-validity");
    CHECK(report.checks[4].name == "alpha-bound");
    CHECK(report.alpha == std::size_t{2});
    CHECK(report.check("alpha-bound").detail == "1 <= alpha 2");
}

TEST_CASE("verify: uncovered vertex")
{
    Hypergraph h(3, {Edge{0, 1}});
    auto report = verify(h, cert_for(h, {EdgeCycle{Edge{0, 1}}}, 2), AlphaMode::Compute);
    CHECK_FALSE(report.ok);
    CHECK_FALSE(report.check("vertex-coverage").passed);
    CHECK(report.check("vertex-coverage").detail == "uncovered: {2}");
    CHECK(report.check("cycle-validity").passed);
    CHECK(report.check("alpha-bound").passed);
}

TEST_CASE("verify: shared edge names the edge and both cycles")
{
    Hypergraph h(3, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}});
    CycleCandidate tri = EdgeSequence{{Edge{0, 1}, Edge{1, 2}, Edge{0, 2}}};
    auto report = verify(h, cert_for(h, {tri, EdgeCycle{Edge{0, 1}}}, 1), AlphaMode::Compute);
    CHECK_FALSE(report.ok);
    CHECK(report.check("edge-disjointness").detail == "edge {0,1} in cycles 0 and 1");
    CHECK_FALSE(report.check("alpha-bound").passed);
    CHECK(report.check("alpha-bound").detail == "2 > alpha 1");
}

TEST_CASE("verify: invalid shapes and non-edges")
{
    Hypergraph h(4, {Edge{0, 1, 2}, Edge{2, 3}});
    CycleCandidate two = EdgeSequence{{Edge{0, 1, 2}, Edge{2, 3}}};
    auto report = verify(h, cert_for(h, {two}, 3), AlphaMode::Compute);
    CHECK_FALSE(report.check("cycle-validity").passed);
    CHECK(report.check("cycle-validity").detail.find("cycle 0") == 0);

    auto outside = verify(h, cert_for(h, {EdgeCycle{Edge{0, 1, 3}}, VertexCycle{9}}, 3),
                          AlphaMode::Compute);
    CHECK(outside.check("edge-membership").detail.find("cycle 0 uses non-edge {0,1,3}") == 0);
    CHECK(outside.check("cycle-validity").detail.find("vertex out of range")
          != std::string::npos);
}

TEST_CASE("verify: trusted bound")
{
    Hypergraph h(3, {Edge{0, 1, 2}});
    auto trusted = verify(h, cert_for(h, {EdgeCycle{Edge{0, 1, 2}}}, 7), AlphaMode::TrustBound);
    CHECK(trusted.ok);
    CHECK(trusted.alpha_used == AlphaMode::TrustBound);
    CHECK(trusted.check("alpha-bound").detail.find("(bound trusted from certificate)")
          != std::string::npos);

    auto lying = verify(h, cert_for(h, {VertexCycle{0}, VertexCycle{1}, VertexCycle{2}}, 3),
                        AlphaMode::TrustBound);
    CHECK(lying.ok);
    auto computed = verify(h, cert_for(h, {VertexCycle{0}, VertexCycle{1}, VertexCycle{2}}, 3),
                           AlphaMode::Compute);
    CHECK_FALSE(computed.ok);
}

TEST_CASE("verify: alpha skipped on budget exhaustion")
{
    auto h = oracle::fano();
    auto cert = solve(h);
    auto report = verify(h, cert, AlphaMode::Compute, SearchBudget(1, 10.0));
    CHECK_FALSE(report.ok);
    CHECK(report.check("alpha-bound").skipped);
    CHECK(report.check("vertex-coverage").passed);
    CHECK_FALSE(report.alpha.has_value());
}

TEST_CASE("verify: instance mismatch throws")
{
    Hypergraph h(3, {Edge{0, 1, 2}});
    Hypergraph other(3, {Edge{0, 1}});
    CHECK_THROWS_AS(verify(other, cert_for(h, {EdgeCycle{Edge{0, 1, 2}}}, 2), AlphaMode::Compute),
                    InstanceMismatch);
}

TEST_CASE("verify: text and JSON reports")
{
    Hypergraph h(3, {Edge{0, 1}});
    auto report = verify(h, cert_for(h, {EdgeCycle{Edge{0, 1}}}, 2), AlphaMode::Compute);
    auto text = report.to_text();
    CHECK(text.find("PASS  cycle-validity") != std::string::npos);
    CHECK(text.find("FAIL  vertex-coverage: uncovered: {2}") != std::string::npos);
    CHECK(text.find("certificate REJECTED") != std::string::npos);
    CHECK(text.find("\033[") == std::string::npos);
    CHECK(report.to_text(true).find("\033[31m") != std::string::npos);

    auto j = report.to_json();
    CHECK(j["ok"] == false);
    CHECK(j["alpha"] == 2);
    CHECK(j["checks"][3]["status"] == "fail");
    CHECK(j["checks"][0]["status"] == "pass");
}

TEST_CASE("verifier_alpha agrees with the subset scan")
{
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 200; ++trial) {
        auto h = oracle::random_hypergraph(rng, 1 + rng() % 11, rng() % 25);
        CHECK(verifier_alpha(h) == oracle::alpha_scan(h));
    }
}

TEST_CASE("verify agrees with the first-principles check on mutants")
{
    std::mt19937_64 rng(313);
    std::size_t invalid = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto h = oracle::random_hypergraph(rng, 2 + rng() % 7, rng() % 14);
        auto cert = solve(h);
        REQUIRE(verify(h, cert, AlphaMode::Compute).ok);
        for (const auto& m : mutation::all_mutants(cert, rng)) {
            const bool truth = oracle::certificate_valid(h, m.cert.cycles);
            invalid += !truth;
            CHECK(verify(h, m.cert, AlphaMode::Compute).ok == truth);
        }
    }
    CHECK(invalid > 100);
}
