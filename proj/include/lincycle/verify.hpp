#pragma once

// Certificate checking. Depends only on the data model and the linear
// cycle validators, never on the solver's searches.

#include "lincycle/budget.hpp"
#include "lincycle/certificate.hpp"
#include "lincycle/core.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lincycle {

enum class AlphaMode { Compute, TrustBound };

struct CheckResult
{
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

struct VerificationReport
{
    bool ok = false;
    /// cycle-validity, edge-membership, edge-disjointness, vertex-coverage,
    /// alpha-bound; always all five, in that order.
    std::vector<CheckResult> checks;
    AlphaMode alpha_used = AlphaMode::Compute;
    std::optional<std::size_t> alpha;

    const CheckResult& check(const std::string& name) const;
    std::string to_text(bool color = false) const;
    nlohmann::ordered_json to_json() const;
};

class InstanceMismatch : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Runs every check even after a failure. Throws InstanceMismatch when the
/// certificate was issued for a different hypergraph.
VerificationReport verify(const Hypergraph& h, const CoverCertificate& cert, AlphaMode mode,
                          const SearchBudget& budget = {});

/// Independence number by plain include/exclude over vertex ids, separate
/// from the solver's search.
std::size_t verifier_alpha(const Hypergraph& h, const SearchBudget& budget = {});

} // namespace lincycle
