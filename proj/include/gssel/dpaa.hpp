#pragma once

#include <cstdint>
#include <vector>

#include "gssel/instance.hpp"
#include "gssel/report.hpp"

namespace gssel {

/// Cost scaling for the approximate solver. Each cost is divided by
///   theta = epsilon * c_max / K
/// and rounded up to an integer (never below 1), shrinking the DP table by
/// roughly a factor of theta at the price of a bounded objective error.
struct ScaledCosts {
    double epsilon = 0;
    double theta = 0;
    std::vector<std::int64_t> scaled;  // one per site, internal order
    std::int64_t bound = 0;            // error_bound(inst, epsilon)
};

/// Computes theta and the rounded-up costs. Quotients within 1e-12 of an
/// integer are snapped to it first so an exact ratio never rounds one step
/// too high through floating-point noise. Throws NonPositiveEpsilon unless
/// epsilon is finite and positive, InvalidConfig when a scaled cost would
/// not fit in 64 bits.
ScaledCosts scale_costs(const Instance& inst, double epsilon);

/// Absolute optimality-gap bound of the scaling solver:
///   min(floor(epsilon * c_max), sum of all site costs).
/// The first term is K * theta, the worst case accumulated by rounding K
/// costs up; the second holds because no feasible selection can cost more
/// than taking every site. Zero exactly when epsilon < 1 / c_max.
std::int64_t error_bound(const Instance& inst, double epsilon);

/// Approximate solve: runs the exact pipeline on the scaled costs and
/// reports the chosen selection at its original cost. Status is Optimal
/// when epsilon < 1 / c_max (the scaling is then too fine to change the
/// optimizer set), Approximate otherwise; `bound` carries error_bound()
/// in both cases, and `epsilon` is recorded in the report.
SolveReport solve_dpaa(const Instance& inst, double epsilon);

}  // namespace gssel
