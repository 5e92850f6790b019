#include "gssel/dp.hpp"

#include <chrono>
#include <limits>
#include <string>

#include "gssel/errors.hpp"

namespace gssel {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

std::int64_t greedy_upper_bound(const Instance& inst, const LinearForm& lf) {
    std::int64_t cost = 0;
    double acc = 0.0;
    std::size_t k = 0;
    while (acc < lf.b - kFeasTol) {
        if (k == inst.size()) {
            throw Infeasible("all sites together cannot meet the threshold");
        }
        acc += lf.a[k];
        cost += inst.sites[k].cost;
        ++k;
    }
    return cost;
}

DpTable fill_table(const Instance& inst, const LinearForm& lf, std::int64_t upper_bound) {
    DpTable t;
    t.upper_bound = upper_bound;
    t.num_rows = inst.size() + 1;
    const std::size_t width = static_cast<std::size_t>(upper_bound + 1);
    t.values.assign(t.num_rows * width, kNegInf);
    t.take.assign(t.num_rows * width, false);

    t.values[t.idx(0, 0)] = 0.0;  // empty selection: cost 0, margin 0
    for (std::size_t i = 1; i < t.num_rows; ++i) {
        const std::int64_t c = inst.sites[i - 1].cost;
        const double a = lf.a[i - 1];
        for (std::int64_t j = 0; j <= upper_bound; ++j) {
            double best = t.values[t.idx(i - 1, j)];  // skip site i-1
            if (j >= c) {
                const double cand = a + t.values[t.idx(i - 1, j - c)];
                if (cand > best) {  // strict: margin ties resolve to skipping
                    best = cand;
                    t.take[t.idx(i, j)] = true;
                }
            }
            t.values[t.idx(i, j)] = best;
        }
    }
    return t;
}

std::int64_t extract_optimum(const DpTable& table, const LinearForm& lf) {
    const std::size_t last = table.num_rows - 1;
    for (std::int64_t j = 0; j <= table.upper_bound; ++j) {
        if (table.value(last, j) >= lf.b - kFeasTol) {
            return j;
        }
    }
    throw NoQualifyingColumn("no cost column reaches the required margin " +
                             std::to_string(lf.b));
}

Selection backtrack(const DpTable& table, const Instance& inst, std::int64_t j_star) {
    std::vector<std::uint8_t> chosen(inst.size(), 0);
    std::int64_t j = j_star;
    for (std::size_t i = inst.size(); i >= 1; --i) {
        if (table.took(i, j)) {
            chosen[i - 1] = 1;
            j -= inst.sites[i - 1].cost;
        }
    }
    if (j != 0) {
        // Every finite cell descends from the cost-0 empty selection, so a
        // nonzero remainder means the table is corrupt.
        throw NoQualifyingColumn("backtracking left residual cost " + std::to_string(j));
    }
    return evaluate(inst, chosen);
}

DpRun dp_select(const Instance& inst) {
    if (!check_feasible(inst)) {
        throw Infeasible("all sites together cannot meet the threshold");
    }
    const GcdReduced red = gcd_reduce(inst);
    const LinearForm lf = to_linear_form(red.instance);
    const std::int64_t upper = greedy_upper_bound(red.instance, lf);
    const DpTable table = fill_table(red.instance, lf, upper);
    const std::int64_t j_star = extract_optimum(table, lf);
    Selection sel = backtrack(table, red.instance, j_star);

    DpRun run;
    run.chosen = std::move(sel.chosen);  // gcd_reduce keeps site order, so
                                         // indices match `inst` directly
    run.table_cells = table.cells();
    run.zeta = red.zeta;
    return run;
}

SolveReport solve_dp(const Instance& inst) {
    const auto t0 = std::chrono::steady_clock::now();
    DpRun run = dp_select(inst);
    const Selection sel = evaluate(inst, run.chosen);
    SolveReport r = make_report("dp", inst, sel, SolveStatus::Optimal,
                                std::int64_t{0}, run.table_cells, run.zeta);
    r.wall_time = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - t0);
    return r;
}

}  // namespace gssel
