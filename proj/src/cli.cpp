#include "gssel/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gssel/errors.hpp"
#include "gssel/harness.hpp"
#include "gssel/instance_io.hpp"
#include "gssel/report.hpp"

namespace gssel {

namespace {

void write_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << content;
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

int run_solve(const std::string& instance_path, const std::string& algo,
              std::optional<double> epsilon, const std::string& out_path) {
    if (epsilon.has_value() && algo != "dpaa") {
        throw InvalidConfig("--epsilon only applies to --algo dpaa");
    }
    const Instance inst = load_instance(instance_path);
    const SolveReport report = run_algorithm(AlgorithmSpec{algo, epsilon}, inst);
    const std::string body = report_to_json(report).dump(2) + "\n";
    std::cout << body;
    if (!out_path.empty()) {
        write_text(out_path, body);
    }
    return 0;
}

int run_gen(std::size_t k, const std::string& cost_rule,
            const std::vector<std::int64_t>& costs, double p_low, double p_high,
            std::uint64_t seed, std::size_t count, double threshold,
            const std::string& out_dir) {
    ExperimentConfig cfg;
    cfg.num_sites = k;
    if (cost_rule == "ceil_k_over_5") {
        cfg.cost_rule = CostRule::CeilKOver5;
    } else if (cost_rule == "unit") {
        cfg.cost_rule = CostRule::Unit;
    } else {  // "explicit", membership enforced by the flag definition
        cfg.cost_rule = CostRule::Explicit;
        cfg.explicit_costs = costs;
    }
    cfg.p_low = p_low;
    cfg.p_high = p_high;
    cfg.seed = seed;
    cfg.num_instances = count;
    cfg.thresholds = {threshold};
    cfg.algorithms = {AlgorithmSpec{"dp", std::nullopt}};  // generation ignores this

    const std::vector<Instance> instances = generate_instances(cfg);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create directory '" + out_dir + "': " + ec.message());
    }
    for (std::size_t i = 0; i < instances.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "instance_%04zu.json", i);
        save_instance(instances[i], std::filesystem::path(out_dir) / name);
    }
    std::cout << "wrote " << instances.size() << " instances to " << out_dir << "\n";
    return 0;
}

int run_bench(const std::string& config_path, const std::string& out_path,
              const std::string& svg_path) {
    const ExperimentConfig cfg = load_config(config_path);
    const std::vector<SweepRow> rows = run_sweep(cfg);
    emit_results(rows, ResultFormat::Csv, out_path);
    if (!svg_path.empty()) {
        emit_results(rows, ResultFormat::Svg, svg_path);
    }
    return 0;
}

int run_check(const std::string& instance_path) {
    const Instance inst = load_instance(instance_path);
    const std::vector<std::uint8_t> all(inst.size(), 1);
    const double product = outage_probability(inst, all);
    if (check_feasible(inst)) {
        std::cout << "feasible: selecting all sites gives outage probability "
                  << product << " <= threshold " << inst.threshold << "\n";
        return 0;
    }
    std::cerr << "infeasible: even selecting all sites leaves outage probability "
              << product << " > threshold " << inst.threshold << "\n";
    return 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"gs-select: minimum-cost ground-station selection under a network"
                 " outage-probability constraint"};
    app.require_subcommand(1);

    // solve
    std::string solve_instance, solve_algo, solve_out;
    double solve_epsilon = 0.0;
    CLI::App* solve = app.add_subcommand("solve", "Solve one instance file");
    solve->add_option("instance", solve_instance, "Instance JSON file")->required();
    solve->add_option("--algo", solve_algo, "Solver to run")
        ->required()
        ->check(CLI::IsMember({"dp", "dpaa", "gd-c", "gd-p", "exhaustive"}));
    CLI::Option* eps_opt =
        solve->add_option("--epsilon", solve_epsilon, "Accuracy parameter (dpaa only)");
    solve->add_option("--out", solve_out, "Also write the report JSON here");

    // gen
    std::size_t gen_k = 25;
    std::string gen_cost_rule = "ceil_k_over_5";
    std::vector<std::int64_t> gen_costs;
    double gen_p_low = 0.25, gen_p_high = 0.75, gen_threshold = 1e-4;
    std::uint64_t gen_seed = 0;
    std::size_t gen_count = 100;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "Generate random instance files");
    gen->add_option("--k", gen_k, "Number of candidate sites");
    gen->add_option("--cost-rule", gen_cost_rule, "Cost assignment rule")
        ->check(CLI::IsMember({"ceil_k_over_5", "unit", "explicit"}));
    gen->add_option("--costs", gen_costs,
                    "Comma-separated site costs (with --cost-rule explicit)")
        ->delimiter(',');
    gen->add_option("--p-low", gen_p_low, "Lower edge of the outage-probability draw");
    gen->add_option("--p-high", gen_p_high, "Upper edge of the outage-probability draw");
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("--count", gen_count, "Number of instances");
    gen->add_option("--threshold", gen_threshold,
                    "Outage threshold embedded in the generated files");
    gen->add_option("--out", gen_out, "Output directory")->required();

    // bench
    std::string bench_config, bench_out, bench_svg;
    CLI::App* bench = app.add_subcommand("bench", "Run a threshold-sweep benchmark");
    bench->add_option("--config", bench_config, "Experiment config JSON")->required();
    bench->add_option("--out", bench_out, "Results CSV path")->required();
    bench->add_option("--svg", bench_svg, "Also render an SVG chart here");

    // check
    std::string check_instance;
    CLI::App* check = app.add_subcommand("check", "Report instance feasibility");
    check->add_option("instance", check_instance, "Instance JSON file")->required();

    try {
        app.parse(argc, argv);
        if (solve->parsed()) {
            std::optional<double> eps;
            if (eps_opt->count() > 0) eps = solve_epsilon;
            return run_solve(solve_instance, solve_algo, eps, solve_out);
        }
        if (gen->parsed()) {
            return run_gen(gen_k, gen_cost_rule, gen_costs, gen_p_low, gen_p_high,
                           gen_seed, gen_count, gen_threshold, gen_out);
        }
        if (bench->parsed()) {
            return run_bench(bench_config, bench_out, bench_svg);
        }
        if (check->parsed()) {
            return run_check(check_instance);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the flag error
        return code == 0 ? 0 : 2;
    } catch (const Infeasible& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace gssel
