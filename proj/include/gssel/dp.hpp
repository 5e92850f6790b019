#pragma once

#include <cstdint>
#include <vector>

#include "gssel/instance.hpp"
#include "gssel/report.hpp"

namespace gssel {

/// Value table of the exact dynamic program.
///
/// Rows are sites 0..K (row 0 = "no sites considered"), columns are exact
/// total costs 0..upper_bound. values[idx(i, j)] is the largest achievable
/// log margin sum a_k z_k over subsets of the first i sites whose cost is
/// exactly j, or -infinity when no such subset exists. `take` records the
/// argmax branch for backtracking: take(i, j) is true when site i-1 is part
/// of the subset realizing values(i, j).
struct DpTable {
    std::int64_t upper_bound = 0;  // highest cost column
    std::size_t num_rows = 0;      // number of sites + 1
    std::vector<double> values;
    std::vector<bool> take;

    std::size_t idx(std::size_t i, std::int64_t j) const {
        return i * static_cast<std::size_t>(upper_bound + 1) + static_cast<std::size_t>(j);
    }
    double value(std::size_t i, std::int64_t j) const { return values[idx(i, j)]; }
    bool took(std::size_t i, std::int64_t j) const { return take[idx(i, j)]; }
    std::uint64_t cells() const { return values.size(); }
};

/// Cost of the cheapest cost-ascending prefix of sites whose combined log
/// margin covers lf.b. This is a feasible selection, so its cost bounds the
/// optimum from above and caps the DP table width. Returns 0 when the
/// threshold is already met by the empty selection. Throws Infeasible when
/// even all sites together fall short.
std::int64_t greedy_upper_bound(const Instance& inst, const LinearForm& lf);

/// Fills the full table over cost columns 0..upper_bound. Ties between
/// skipping and taking a site are resolved toward skipping, so among
/// margin-equal subsets backtracking prefers ones using later (costlier)
/// rows as little as possible.
DpTable fill_table(const Instance& inst, const LinearForm& lf, std::int64_t upper_bound);

/// Smallest cost column whose final-row margin covers lf.b (within kFeasTol).
/// Throws NoQualifyingColumn if no column qualifies, which cannot happen
/// when the table was built with a greedy upper bound on a feasible
/// instance.
std::int64_t extract_optimum(const DpTable& table, const LinearForm& lf);

/// Recovers the selection realizing values(K, j_star) by following the
/// stored take bits. The result is in `inst`'s internal index space and its
/// cost is exactly j_star.
Selection backtrack(const DpTable& table, const Instance& inst, std::int64_t j_star);

/// Outcome of the untimed pipeline shared by the exact solver and the
/// cost-scaling solver: the chosen selection (internal index space of the
/// instance the pipeline ran on), the table size actually allocated, and
/// the cost gcd divided out before tabulation.
struct DpRun {
    std::vector<std::uint8_t> chosen;
    std::uint64_t table_cells = 0;
    std::int64_t zeta = 1;
};

/// Feasibility check, gcd cost reduction, greedy bound, table fill, optimum
/// extraction, backtracking. The gcd reduction only rescales costs, so the
/// returned selection is optimal for `inst` itself.
DpRun dp_select(const Instance& inst);

/// Exact minimum-cost solve. Status is Optimal with bound 0.
SolveReport solve_dp(const Instance& inst);

}  // namespace gssel
