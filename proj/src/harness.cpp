#include "gssel/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <thread>

#include "gssel/dp.hpp"
#include "gssel/dpaa.hpp"
#include "gssel/errors.hpp"
#include "gssel/exhaustive.hpp"
#include "gssel/greedy.hpp"
#include "gssel/rng.hpp"

namespace gssel {

namespace {

constexpr int kMaxRedraws = 10000;

bool known_algorithm(const std::string& name) {
    return name == "dp" || name == "dpaa" || name == "gd-c" || name == "gd-p" ||
           name == "exhaustive";
}

/// Worker count for one sweep row: hardware concurrency, optionally capped
/// by GS_SELECT_THREADS, never more than there are instances.
std::size_t sweep_threads(std::size_t num_instances) {
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("GS_SELECT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            n = std::min(n, static_cast<std::size_t>(v));
        }
    }
    return std::max<std::size_t>(1, std::min(n, num_instances));
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.num_sites == 0) {
        throw InvalidConfig("num_sites must be positive");
    }
    if (cfg.cost_rule == CostRule::Explicit) {
        if (cfg.explicit_costs.size() != cfg.num_sites) {
            throw InvalidConfig("explicit cost list has " +
                                std::to_string(cfg.explicit_costs.size()) +
                                " entries for " + std::to_string(cfg.num_sites) +
                                " sites");
        }
        for (std::int64_t c : cfg.explicit_costs) {
            if (c <= 0) {
                throw InvalidConfig("explicit costs must be positive, got " +
                                    std::to_string(c));
            }
        }
    } else if (!cfg.explicit_costs.empty()) {
        throw InvalidConfig("explicit costs given but cost_rule is not explicit");
    }
    if (!(cfg.p_low > 0.0) || !(cfg.p_low < cfg.p_high) || cfg.p_high > 1.0 ||
        !std::isfinite(cfg.p_low) || !std::isfinite(cfg.p_high)) {
        throw InvalidConfig("need 0 < p_low < p_high <= 1, got p_low=" +
                            std::to_string(cfg.p_low) + ", p_high=" +
                            std::to_string(cfg.p_high));
    }
    if (cfg.num_instances == 0) {
        throw InvalidConfig("num_instances must be positive");
    }
    if (cfg.thresholds.empty()) {
        throw InvalidConfig("thresholds must be nonempty");
    }
    for (double t : cfg.thresholds) {
        if (!(t > 0.0) || t > 1.0 || !std::isfinite(t)) {
            throw InvalidConfig("thresholds must lie in (0, 1], got " +
                                std::to_string(t));
        }
    }
    if (cfg.algorithms.empty()) {
        throw InvalidConfig("algorithms must be nonempty");
    }
    for (const AlgorithmSpec& a : cfg.algorithms) {
        if (!known_algorithm(a.name)) {
            throw InvalidConfig("unknown algorithm '" + a.name + "'");
        }
        if (a.name == "dpaa") {
            if (!a.epsilon.has_value() || !(*a.epsilon > 0.0) ||
                !std::isfinite(*a.epsilon)) {
                throw InvalidConfig("dpaa requires a finite positive epsilon");
            }
        } else if (a.epsilon.has_value()) {
            throw InvalidConfig("algorithm '" + a.name + "' does not take epsilon");
        }
        if (a.name == "exhaustive" && cfg.num_sites > kExhaustiveMaxSites) {
            throw InvalidConfig("exhaustive search is limited to " +
                                std::to_string(kExhaustiveMaxSites) +
                                " sites, config has " + std::to_string(cfg.num_sites));
        }
    }
    if (cfg.time_limit_us.has_value() && *cfg.time_limit_us <= 0) {
        throw InvalidConfig("time_limit_us must be positive");
    }
}

ExperimentConfig parse_config(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw InvalidConfig("config must be a JSON object");
    }
    ExperimentConfig cfg;
    try {
        if (j.contains("K")) cfg.num_sites = j.at("K").get<std::size_t>();
        if (j.contains("cost_rule")) {
            const nlohmann::json& cr = j.at("cost_rule");
            if (cr.is_string()) {
                const std::string s = cr.get<std::string>();
                if (s == "ceil_k_over_5") {
                    cfg.cost_rule = CostRule::CeilKOver5;
                } else if (s == "unit") {
                    cfg.cost_rule = CostRule::Unit;
                } else {
                    throw InvalidConfig("cost_rule must be \"ceil_k_over_5\", \"unit\","
                                        " or an array of costs; got \"" + s + "\"");
                }
            } else if (cr.is_array()) {
                cfg.cost_rule = CostRule::Explicit;
                cfg.explicit_costs = cr.get<std::vector<std::int64_t>>();
            } else {
                throw InvalidConfig("cost_rule must be a string or an array");
            }
        }
        if (j.contains("p_low")) cfg.p_low = j.at("p_low").get<double>();
        if (j.contains("p_high")) cfg.p_high = j.at("p_high").get<double>();
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("num_instances")) {
            cfg.num_instances = j.at("num_instances").get<std::size_t>();
        }
        if (!j.contains("thresholds")) {
            throw InvalidConfig("config is missing \"thresholds\"");
        }
        cfg.thresholds = j.at("thresholds").get<std::vector<double>>();
        if (!j.contains("algorithms")) {
            throw InvalidConfig("config is missing \"algorithms\"");
        }
        for (const nlohmann::json& a : j.at("algorithms")) {
            AlgorithmSpec spec;
            if (a.is_string()) {
                spec.name = a.get<std::string>();
            } else if (a.is_object()) {
                spec.name = a.at("name").get<std::string>();
                if (a.contains("epsilon")) {
                    spec.epsilon = a.at("epsilon").get<double>();
                }
            } else {
                throw InvalidConfig("algorithm entries must be strings or objects");
            }
            cfg.algorithms.push_back(std::move(spec));
        }
        if (j.contains("time_limit_us")) {
            cfg.time_limit_us = j.at("time_limit_us").get<std::int64_t>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidConfig(std::string("malformed config: ") + e.what());
    }
    validate_config(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string(), "cannot open file");
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string(), e.what());
    }
    return parse_config(j);
}

std::vector<std::int64_t> costs_for(const ExperimentConfig& cfg) {
    std::vector<std::int64_t> costs;
    costs.reserve(cfg.num_sites);
    for (std::size_t k = 1; k <= cfg.num_sites; ++k) {
        switch (cfg.cost_rule) {
            case CostRule::CeilKOver5:
                costs.push_back(static_cast<std::int64_t>((k + 4) / 5));
                break;
            case CostRule::Unit:
                costs.push_back(1);
                break;
            case CostRule::Explicit:
                costs.push_back(cfg.explicit_costs[k - 1]);
                break;
        }
    }
    return costs;
}

std::vector<Instance> generate_instances(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const double t_min = *std::min_element(cfg.thresholds.begin(), cfg.thresholds.end());
    const double b_min = -std::log(t_min);
    const std::vector<std::int64_t> costs = costs_for(cfg);

    std::vector<Instance> instances;
    instances.reserve(cfg.num_instances);
    for (std::size_t i = 0; i < cfg.num_instances; ++i) {
        std::mt19937_64 gen = substream(cfg.seed, i);
        std::vector<double> probs(cfg.num_sites);
        bool feasible = false;
        for (int attempt = 0; attempt < kMaxRedraws && !feasible; ++attempt) {
            double margin = 0.0;
            for (double& p : probs) {
                p = uniform_open(gen, cfg.p_low, cfg.p_high);
                margin += -std::log(p);
            }
            feasible = margin >= b_min - kFeasTol;
        }
        if (!feasible) {
            throw InvalidConfig("instance " + std::to_string(i) + " still infeasible at"
                                " threshold " + std::to_string(t_min) + " after " +
                                std::to_string(kMaxRedraws) + " redraws");
        }
        std::vector<Site> sites;
        sites.reserve(cfg.num_sites);
        for (std::size_t k = 0; k < cfg.num_sites; ++k) {
            sites.push_back(Site{"gs" + std::to_string(k + 1), costs[k], probs[k]});
        }
        instances.push_back(build_instance(std::move(sites), t_min));
    }
    return instances;
}

SolveReport run_algorithm(const AlgorithmSpec& algo, const Instance& inst) {
    if (algo.name == "dp") return solve_dp(inst);
    if (algo.name == "dpaa") {
        if (!algo.epsilon.has_value()) {
            throw InvalidConfig("dpaa requires a finite positive epsilon");
        }
        return solve_dpaa(inst, *algo.epsilon);
    }
    if (algo.name == "gd-c") return solve_gd_c(inst);
    if (algo.name == "gd-p") return solve_gd_p(inst);
    if (algo.name == "exhaustive") return exhaustive_search(inst);
    throw InvalidConfig("unknown algorithm '" + algo.name + "'");
}

namespace {

struct CellOutcome {
    bool feasible = false;
    std::int64_t cost = 0;
    std::int64_t runtime_us = 0;
};

/// Solves one (threshold, algorithm) row across all instances in parallel.
/// Slot order is by instance index, so the later reduction is deterministic
/// no matter how the work was scheduled.
std::vector<CellOutcome> solve_row(const std::vector<Instance>& instances,
                                   double threshold, const AlgorithmSpec& algo) {
    std::vector<CellOutcome> slots(instances.size());
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            try {
                const Instance inst = with_threshold(instances[i], threshold);
                try {
                    const SolveReport r = run_algorithm(algo, inst);
                    slots[i] = CellOutcome{true, r.objective, r.wall_time.count()};
                } catch (const Infeasible&) {
                    slots[i].feasible = false;
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const std::size_t n_threads = sweep_threads(instances.size());
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return slots;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const std::vector<Instance> instances = generate_instances(cfg);

    std::vector<double> thresholds = cfg.thresholds;
    std::sort(thresholds.begin(), thresholds.end(), std::greater<double>());

    std::vector<SweepRow> rows;
    rows.reserve(thresholds.size() * cfg.algorithms.size());
    for (double t : thresholds) {
        for (const AlgorithmSpec& algo : cfg.algorithms) {
            const std::vector<CellOutcome> slots = solve_row(instances, t, algo);

            SweepRow row;
            row.threshold = t;
            row.algorithm = algo.name;
            row.epsilon = algo.epsilon;

            // Streaming mean/variance over counted instances, in index order.
            double mean = 0.0, m2 = 0.0, runtime_sum = 0.0;
            std::int64_t n = 0;
            for (const CellOutcome& cell : slots) {
                const bool timed_out = cfg.time_limit_us.has_value() &&
                                       cell.runtime_us > *cfg.time_limit_us;
                if (!cell.feasible || timed_out) {
                    ++row.n_skipped;
                    continue;
                }
                ++n;
                const double x = static_cast<double>(cell.cost);
                const double delta = x - mean;
                mean += delta / static_cast<double>(n);
                m2 += delta * (x - mean);
                runtime_sum += static_cast<double>(cell.runtime_us);
            }
            row.n_feasible = n;
            if (n > 0) {
                row.mean_cost = mean;
                row.std_cost = std::sqrt(m2 / static_cast<double>(n));
                row.mean_runtime_us = runtime_sum / static_cast<double>(n);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace gssel
