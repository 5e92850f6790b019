#include "gssel/exhaustive.hpp"

#include <chrono>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gssel/errors.hpp"

namespace gssel {

namespace {

struct Enumerator {
    const Instance& inst;
    const LinearForm& lf;
    std::vector<std::uint8_t> current;
    std::vector<std::uint8_t> best;
    std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();

    // Plain depth-first sweep of every selection, no pruning: this is the
    // trusted baseline the fast solvers are checked against, so it stays as
    // literal as possible. Leaving a site out is explored before taking it.
    void visit(std::size_t i, std::int64_t cost, double margin) {
        if (i == inst.size()) {
            if (margin >= lf.b - kFeasTol && cost < best_cost) {
                best_cost = cost;
                best = current;
            }
            return;
        }
        visit(i + 1, cost, margin);
        current[i] = 1;
        visit(i + 1, cost + inst.sites[i].cost, margin + lf.a[i]);
        current[i] = 0;
    }
};

}  // namespace

SolveReport exhaustive_search(const Instance& inst) {
    const auto t0 = std::chrono::steady_clock::now();
    if (inst.size() > kExhaustiveMaxSites) {
        throw TooLargeForExhaustive("refusing to enumerate 2^" +
                                    std::to_string(inst.size()) + " selections (max " +
                                    std::to_string(kExhaustiveMaxSites) + " sites)");
    }
    if (!check_feasible(inst)) {
        throw Infeasible("all sites together cannot meet the threshold");
    }

    const LinearForm lf = to_linear_form(inst);
    Enumerator e{inst, lf, std::vector<std::uint8_t>(inst.size(), 0), {},
                 std::numeric_limits<std::int64_t>::max()};
    e.visit(0, 0, 0.0);

    const Selection sel = evaluate(inst, e.best);
    SolveReport r = make_report("exhaustive", inst, sel, SolveStatus::Optimal,
                                std::int64_t{0}, /*table_cells=*/0, /*zeta=*/1);
    r.wall_time = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - t0);
    return r;
}

}  // namespace gssel
