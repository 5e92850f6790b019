#include "gssel/dpaa.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "gssel/dp.hpp"
#include "gssel/errors.hpp"

namespace gssel {

namespace {

void require_valid_epsilon(double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw NonPositiveEpsilon("epsilon must be finite and positive, got " +
                                 std::to_string(epsilon));
    }
}

}  // namespace

ScaledCosts scale_costs(const Instance& inst, double epsilon) {
    require_valid_epsilon(epsilon);
    const std::int64_t c_max = inst.sites.back().cost;  // sites are cost-ascending
    ScaledCosts sc;
    sc.epsilon = epsilon;
    sc.theta = epsilon * static_cast<double>(c_max) / static_cast<double>(inst.size());
    sc.scaled.reserve(inst.size());
    for (const Site& s : inst.sites) {
        const double q = static_cast<double>(s.cost) / sc.theta;
        const double r = std::round(q);
        double up = (std::abs(q - r) < 1e-12) ? r : std::ceil(q);
        if (up < 1.0) up = 1.0;
        if (!(up < 9.0e18)) {
            throw InvalidConfig("epsilon " + std::to_string(epsilon) +
                                " scales cost " + std::to_string(s.cost) +
                                " beyond the 64-bit range");
        }
        sc.scaled.push_back(static_cast<std::int64_t>(up));
    }
    sc.bound = error_bound(inst, epsilon);
    return sc;
}

std::int64_t error_bound(const Instance& inst, double epsilon) {
    require_valid_epsilon(epsilon);
    std::int64_t total = 0;
    for (const Site& s : inst.sites) {
        total += s.cost;
    }
    const double worst = epsilon * static_cast<double>(inst.sites.back().cost);
    if (worst >= static_cast<double>(total)) {
        return total;
    }
    return static_cast<std::int64_t>(std::floor(worst));
}

SolveReport solve_dpaa(const Instance& inst, double epsilon) {
    const auto t0 = std::chrono::steady_clock::now();
    const ScaledCosts sc = scale_costs(inst, epsilon);

    // Rounding up is monotone, so replacing the costs in place keeps the
    // sites cost-ascending and the internal index space identical.
    Instance scaled = inst;
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        scaled.sites[i].cost = sc.scaled[i];
    }

    DpRun run = dp_select(scaled);  // throws Infeasible like the exact solver
    const Selection sel = evaluate(inst, run.chosen);

    const std::int64_t c_max = inst.sites.back().cost;
    const bool exact_regime = epsilon < 1.0 / static_cast<double>(c_max);
    SolveReport r = make_report("dpaa", inst, sel,
                                exact_regime ? SolveStatus::Optimal
                                             : SolveStatus::Approximate,
                                sc.bound, run.table_cells, run.zeta);
    r.epsilon = epsilon;
    r.wall_time = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - t0);
    return r;
}

}  // namespace gssel
