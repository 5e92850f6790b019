#pragma once

#include "gssel/instance.hpp"
#include "gssel/report.hpp"

namespace gssel {

/// Cheapest-first baseline: scans sites in nondecreasing cost order and
/// keeps adding until the threshold is met. Status Heuristic, no gap bound.
/// Throws Infeasible when even the full catalog falls short.
SolveReport solve_gd_c(const Instance& inst);

/// Most-reliable-first baseline: scans sites by ascending outage
/// probability (ties: cheaper first, then the caller's original order) and
/// keeps adding until the threshold is met. Status Heuristic, no gap bound.
/// Throws Infeasible when even the full catalog falls short.
SolveReport solve_gd_p(const Instance& inst);

}  // namespace gssel
