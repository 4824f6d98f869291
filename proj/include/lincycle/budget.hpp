#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lincycle {

/// Per-search limits. Exceeding either ends the search with BudgetExhausted.
class SearchBudget
{
public:
    static constexpr std::uint64_t kDefaultNodes = 10'000'000;
    static constexpr double kDefaultSeconds = 30.0;

    SearchBudget() = default;
    /// Throws std::invalid_argument unless both limits are positive.
    SearchBudget(std::uint64_t node_limit, double time_limit_secs);

    std::uint64_t node_limit() const { return node_limit_; }
    double time_limit_secs() const { return time_limit_secs_; }

private:
    std::uint64_t node_limit_ = kDefaultNodes;
    double time_limit_secs_ = kDefaultSeconds;
};

class BudgetExhausted : public std::runtime_error
{
public:
    explicit BudgetExhausted(const std::string& phase);
};

/// Counts search-tree nodes for one search call.
class BudgetMeter
{
public:
    BudgetMeter(const SearchBudget& budget, std::string phase);

    /// Counts one node; throws BudgetExhausted once a limit is passed.
    void tick()
    {
        if (++nodes_ > limit_)
            throw BudgetExhausted(phase_ + ": node limit reached");
        if ((nodes_ & 1023) == 0)
            check_clock();
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void check_clock() const;

    std::uint64_t nodes_ = 0;
    std::uint64_t limit_;
    std::chrono::steady_clock::time_point deadline_;
    std::string phase_;
};

} // namespace lincycle
