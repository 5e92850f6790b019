#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gssel/instance.hpp"
#include "gssel/report.hpp"

namespace gssel {

/// How the benchmark generator assigns costs to the K sites (1-based k).
enum class CostRule {
    CeilKOver5,  // c_k = ceil(k / 5): five sites at cost 1, five at 2, ...
    Unit,        // all costs 1 (pure cardinality minimization)
    Explicit,    // caller-provided list, one cost per site
};

/// One solver entry in a sweep. `epsilon` is required for "dpaa" and must
/// be absent for everything else.
struct AlgorithmSpec {
    std::string name;
    std::optional<double> epsilon;
};

/// Full description of a benchmark experiment: the random instance
/// population, the threshold sweep, and the solvers to run.
struct ExperimentConfig {
    std::size_t num_sites = 25;
    CostRule cost_rule = CostRule::CeilKOver5;
    std::vector<std::int64_t> explicit_costs;  // only for CostRule::Explicit
    double p_low = 0.25;
    double p_high = 0.75;
    std::uint64_t seed = 0;
    std::size_t num_instances = 100;
    std::vector<double> thresholds;
    std::vector<AlgorithmSpec> algorithms;
    std::optional<std::int64_t> time_limit_us;  // per solver call, checked after it returns
};

/// Aggregate of one (threshold, algorithm) cell of the sweep. Mean and
/// standard deviation (population form, n divisor) cover only the counted
/// instances; instances that were infeasible at this threshold or blew the
/// per-call time limit go to n_skipped. n_feasible + n_skipped always
/// equals the config's num_instances.
struct SweepRow {
    double threshold = 0;
    std::string algorithm;
    std::optional<double> epsilon;
    double mean_cost = 0;
    double std_cost = 0;
    double mean_runtime_us = 0;
    std::int64_t n_feasible = 0;
    std::int64_t n_skipped = 0;
};

/// Output format for emit_results.
enum class ResultFormat { Csv, Json, Svg };

/// Validates every config field; throws InvalidConfig naming the offender.
void validate_config(const ExperimentConfig& cfg);

/// Reads an ExperimentConfig from JSON. Field names mirror the struct:
/// num_sites, cost_rule ("ceil_k_over_5" | "unit" | an explicit cost
/// array), p_low, p_high, seed, num_instances, thresholds, algorithms
/// (either "dp" or {"name": "dpaa", "epsilon": 0.1}), optional
/// time_limit_us.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Costs for sites 1..num_sites under the config's rule.
std::vector<std::int64_t> costs_for(const ExperimentConfig& cfg);

/// Draws the instance population: ids "gs1".."gsK", costs per the rule,
/// outage probabilities i.i.d. uniform on (p_low, p_high) from substream
/// (seed, instance index). A draw infeasible at the smallest sweep
/// threshold is redrawn (whole p-vector, same substream) up to 10000 times,
/// then InvalidConfig. Instances carry that smallest threshold; the sweep
/// re-targets them per row. Same config and seed give identical instances
/// on every platform.
std::vector<Instance> generate_instances(const ExperimentConfig& cfg);

/// Dispatches one solver call by algorithm name ("dp", "dpaa", "gd-c",
/// "gd-p", "exhaustive"). Throws InvalidConfig for anything else or for a
/// dpaa entry without epsilon.
SolveReport run_algorithm(const AlgorithmSpec& algo, const Instance& inst);

/// Runs every algorithm on every instance at every threshold and
/// aggregates. Rows are ordered by (threshold descending, algorithm in
/// config order). Instance cells run in parallel (capped by the
/// GS_SELECT_THREADS environment variable when set); aggregation is a
/// deterministic sequential reduction over instance index, so results do
/// not depend on scheduling.
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg);

/// Writes rows as CSV (fixed header, shortest round-trip number format),
/// a JSON array, or a minimal self-contained SVG line chart (mean cost vs
/// threshold on a log axis, one series per algorithm entry). Throws
/// IoError on write failure and EmptyRows for an SVG of nothing.
void emit_results(const std::vector<SweepRow>& rows, ResultFormat format,
                  const std::filesystem::path& path);

/// Rendering helpers behind emit_results, exposed for round-trip checks.
std::string rows_to_csv(const std::vector<SweepRow>& rows);
nlohmann::json rows_to_json(const std::vector<SweepRow>& rows);
std::vector<SweepRow> rows_from_json(const nlohmann::json& j);
std::string rows_to_svg(const std::vector<SweepRow>& rows);

}  // namespace gssel
