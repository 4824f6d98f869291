#pragma once

// End-to-end harness: generate, solve, verify with exact alpha.

#include "lincycle/budget.hpp"
#include "lincycle/certificate.hpp"
#include "lincycle/cover.hpp"
#include "lincycle/generate.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lincycle {

struct FuzzOptions
{
    std::size_t count = 100;
    std::size_t n_min = 1;
    std::size_t n_max = 8;
    /// Instance i uses combination i mod (|p3| * |p2|), p2 varying fastest.
    std::vector<double> p3{0.3};
    std::vector<double> p2{0.0};
    std::uint64_t seed = 1;
    AssertLevel level = AssertLevel::Cheap;
    SearchBudget budget;
    std::optional<std::filesystem::path> save_failures;
    unsigned jobs = 1;
    /// Test hook applied to each certificate before verification.
    std::function<void(CoverCertificate&)> tamper;
};

struct FuzzFailure
{
    std::size_t index = 0;
    GenSpec spec;
    std::string reason;
};

struct FuzzSummary
{
    std::size_t instances = 0;
    std::vector<FuzzFailure> failures;
    /// (alpha, cover size) -> number of instances.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> sizes;
    double seconds = 0.0;

    bool ok() const { return failures.empty(); }
    /// Deterministic report; wall time is left out.
    std::string to_text() const;
};

/// The spec of instance i: n and seed derive from splitmix64(seed + i).
GenSpec fuzz_instance_spec(const FuzzOptions& options, std::size_t i);

/// Throws std::invalid_argument on an empty probability list or bad range.
FuzzSummary run_fuzz(const FuzzOptions& options);

} // namespace lincycle
