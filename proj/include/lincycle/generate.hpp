#pragma once

#include "lincycle/core.hpp"

#include <cstdint>

namespace lincycle {

/// Random instance parameters. Generation is a pure function of all four.
struct GenSpec
{
    std::size_t n = 0;
    double p2 = 0.0;
    double p3 = 0.0;
    std::uint64_t seed = 0;
};

/// Draws from std::mt19937_64 seeded with spec.seed: one draw per 3-subset
/// in lexicographic order, then one per 2-subset. A draw r keeps the subset
/// iff (r >> 11) * 2^-53 < p. Throws std::invalid_argument on p outside
/// [0, 1] or n above kMaxVertices.
Hypergraph generate(const GenSpec& spec);

/// SplitMix64 step, used to derive per-instance seeds.
std::uint64_t splitmix64(std::uint64_t x);

} // namespace lincycle
