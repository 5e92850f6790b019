#include "gssel/report.hpp"

namespace gssel {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "Optimal";
        case SolveStatus::Approximate: return "Approximate";
        case SolveStatus::Heuristic: return "Heuristic";
    }
    return "Heuristic";
}

SolveReport make_report(std::string algorithm, const Instance& inst,
                        const Selection& sel, SolveStatus status,
                        std::optional<std::int64_t> bound,
                        std::uint64_t table_cells, std::int64_t zeta) {
    SolveReport r;
    r.algorithm = std::move(algorithm);
    r.objective = sel.cost;
    r.status = status;
    r.bound = bound;
    r.log_margin = sel.log_margin;
    r.table_cells = table_cells;
    r.zeta = zeta;
    r.outage_prob = outage_probability(inst, sel.chosen);

    r.chosen.assign(inst.size(), 0);
    std::vector<std::size_t> internal_at(inst.size());  // user position -> internal slot
    for (std::size_t i = 0; i < inst.size(); ++i) {
        r.chosen[inst.original_order[i]] = sel.chosen[i];
        internal_at[inst.original_order[i]] = i;
    }
    for (std::size_t u = 0; u < inst.size(); ++u) {
        if (r.chosen[u]) {
            r.selected_ids.push_back(inst.sites[internal_at[u]].id);
        }
    }
    return r;
}

nlohmann::json report_to_json(const SolveReport& r) {
    nlohmann::json j;
    j["algorithm"] = r.algorithm;
    j["objective"] = r.objective;
    j["status"] = to_string(r.status);
    if (r.bound.has_value()) {
        j["bound"] = *r.bound;
    } else {
        j["bound"] = nullptr;
    }
    if (r.epsilon.has_value()) {
        j["epsilon"] = *r.epsilon;
    }
    j["selected_ids"] = r.selected_ids;
    j["outage_probability"] = r.outage_prob;
    j["table_cells"] = r.table_cells;
    j["wall_time_us"] = r.wall_time.count();
    return j;
}

}  // namespace gssel
