#pragma once

#include <iosfwd>

namespace lincycle::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kBudgetExhausted = 2,
    kVerificationFailed = 3,
    kFuzzFailures = 4,
    kInternalError = 5,
};

/// Entry point for the `lincycle` tool: solve, verify, alpha, gen, fuzz.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lincycle::cli
