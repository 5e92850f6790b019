#include "gssel/greedy.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <vector>

#include "gssel/errors.hpp"

namespace gssel {

namespace {

/// Takes the shortest prefix of `order` whose accumulated margin covers
/// lf.b and wraps it up as a heuristic report.
SolveReport prefix_report(const char* name, const Instance& inst, const LinearForm& lf,
                          const std::vector<std::size_t>& order,
                          std::chrono::steady_clock::time_point t0) {
    std::vector<std::uint8_t> chosen(inst.size(), 0);
    double acc = 0.0;
    std::size_t k = 0;
    while (acc < lf.b - kFeasTol) {
        if (k == order.size()) {
            throw Infeasible("all sites together cannot meet the threshold");
        }
        chosen[order[k]] = 1;
        acc += lf.a[order[k]];
        ++k;
    }
    const Selection sel = evaluate(inst, chosen);
    SolveReport r = make_report(name, inst, sel, SolveStatus::Heuristic,
                                std::nullopt, /*table_cells=*/0, /*zeta=*/1);
    r.wall_time = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - t0);
    return r;
}

}  // namespace

SolveReport solve_gd_c(const Instance& inst) {
    const auto t0 = std::chrono::steady_clock::now();
    const LinearForm lf = to_linear_form(inst);
    std::vector<std::size_t> order(inst.size());
    std::iota(order.begin(), order.end(), std::size_t{0});  // already cost-ascending
    return prefix_report("gd-c", inst, lf, order, t0);
}

SolveReport solve_gd_p(const Instance& inst) {
    const auto t0 = std::chrono::steady_clock::now();
    const LinearForm lf = to_linear_form(inst);
    std::vector<std::size_t> order(inst.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        const Site& sl = inst.sites[l];
        const Site& sr = inst.sites[r];
        if (sl.outage_prob != sr.outage_prob) return sl.outage_prob < sr.outage_prob;
        if (sl.cost != sr.cost) return sl.cost < sr.cost;
        return inst.original_order[l] < inst.original_order[r];
    });
    return prefix_report("gd-p", inst, lf, order, t0);
}

}  // namespace gssel
