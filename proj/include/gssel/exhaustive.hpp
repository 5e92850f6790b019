#pragma once

#include "gssel/instance.hpp"
#include "gssel/report.hpp"

namespace gssel {

/// Number of sites above which exhaustive enumeration is refused.
inline constexpr std::size_t kExhaustiveMaxSites = 30;

/// Reference oracle: enumerates all 2^K selections and keeps the cheapest
/// feasible one. Cost ties keep the first selection in depth-first
/// leave-out-before-take-in order, i.e. the lexicographically smallest
/// indicator vector over the cost-sorted sites. Exponential in K; throws
/// TooLargeForExhaustive beyond kExhaustiveMaxSites and Infeasible when no
/// selection qualifies.
SolveReport exhaustive_search(const Instance& inst);

}  // namespace gssel
