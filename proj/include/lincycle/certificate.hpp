#pragma once

#include "lincycle/core.hpp"
#include "lincycle/linear.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lincycle {

struct CoverStats
{
    /// Number of reduction steps before reaching a base case.
    std::size_t recursion_depth = 0;
    std::uint64_t search_nodes = 0;
    std::size_t red_edges_lifted = 0;
    /// False when alpha_bound is the cover size rather than an exact alpha.
    bool alpha_exact = false;

    friend bool operator==(const CoverStats&, const CoverStats&) = default;
};

/// Solver output: claimed cycles for an instance. Cycles are kept unchecked
/// so a certificate read from disk can be verified as-is.
struct CoverCertificate
{
    Hypergraph instance;
    std::vector<CycleCandidate> cycles;
    std::size_t alpha_bound = 0;
    CoverStats stats;
};

class CertificateError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Keys in fixed order: n, edges, cycles, alpha_bound, stats.
nlohmann::ordered_json to_json(const CoverCertificate& cert);
/// Compact JSON with one cycle per line and a trailing newline.
std::string serialize_certificate(const CoverCertificate& cert);
/// Throws CertificateError on malformed JSON or structure.
CoverCertificate parse_certificate(std::string_view text);

} // namespace lincycle
