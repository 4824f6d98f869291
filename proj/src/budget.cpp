#include "lincycle/budget.hpp"

#include <algorithm>

namespace lincycle {

SearchBudget::SearchBudget(std::uint64_t node_limit, double time_limit_secs)
    : node_limit_(node_limit), time_limit_secs_(time_limit_secs)
{
    if (node_limit_ == 0)
        throw std::invalid_argument("node budget must be positive");
    if (!(time_limit_secs_ > 0.0))
        throw std::invalid_argument("time budget must be positive");
}

BudgetExhausted::BudgetExhausted(const std::string& phase)
    : std::runtime_error("budget exhausted in " + phase)
{
}

BudgetMeter::BudgetMeter(const SearchBudget& budget, std::string phase)
    : limit_(budget.node_limit()),
      deadline_(std::chrono::steady_clock::now()
                + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(std::min(budget.time_limit_secs(), 1e7)))),
      phase_(std::move(phase))
{
}

void BudgetMeter::check_clock() const
{
    if (std::chrono::steady_clock::now() > deadline_)
        throw BudgetExhausted(phase_ + ": time limit reached");
}

} // namespace lincycle
