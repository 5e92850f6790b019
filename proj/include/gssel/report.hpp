#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gssel/instance.hpp"

namespace gssel {

/// Quality contract of a returned selection.
///  - Optimal: objective equals the true minimum.
///  - Approximate: objective exceeds the minimum by at most `bound`.
///  - Heuristic: feasible, no quality guarantee (`bound` is empty).
enum class SolveStatus { Optimal, Approximate, Heuristic };

const char* to_string(SolveStatus s);

/// Result of one solver run. Selection vectors are in the caller's original
/// site order (not the internal cost-sorted order).
struct SolveReport {
    std::string algorithm;
    std::int64_t objective = 0;          // total cost of the selection
    SolveStatus status = SolveStatus::Heuristic;
    std::optional<std::int64_t> bound;   // absolute optimality gap bound
    std::optional<double> epsilon;       // only set by the scaling solver
    std::vector<std::uint8_t> chosen;    // 0/1 per site, user order
    std::vector<std::string> selected_ids;  // ids of chosen sites, user order
    double outage_prob = 1.0;            // product over chosen sites
    double log_margin = 0.0;             // sum of -ln(p) over chosen sites
    std::uint64_t table_cells = 0;       // DP table size, 0 for table-free solvers
    std::int64_t zeta = 1;               // cost gcd divided out internally
    std::chrono::microseconds wall_time{0};
};

/// Assembles a report from a selection in `inst`'s internal index space,
/// translating indices and ids back to the caller's order. `wall_time` is
/// left zero; solvers stamp it themselves.
SolveReport make_report(std::string algorithm, const Instance& inst,
                        const Selection& sel, SolveStatus status,
                        std::optional<std::int64_t> bound,
                        std::uint64_t table_cells, std::int64_t zeta);

nlohmann::json report_to_json(const SolveReport& r);

}  // namespace gssel
