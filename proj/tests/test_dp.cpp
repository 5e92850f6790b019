#include <doctest.h>

#include <cmath>
#include <limits>

#include "gssel/dp.hpp"
#include "gssel/errors.hpp"
#include "gssel/exhaustive.hpp"
#include "gssel/rng.hpp"
#include "oracle.hpp"

using namespace gssel;

namespace {

Instance triple_half() {
    return build_instance({{"a", 1, 0.5}, {"b", 2, 0.5}, {"c", 3, 0.5}}, 0.3);
}

/// Random feasible instance: k sites, costs in {1..9}, p in (0.25, 0.75),
/// threshold drawn between the all-sites product and 1 so the instance is
/// always solvable.
Instance random_feasible(std::mt19937_64& gen, std::size_t max_sites = 12) {
    const std::size_t k = 1 + gen() % max_sites;
    std::vector<Site> sites;
    double product = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double p = uniform_open(gen, 0.25, 0.75);
        product *= p;
        sites.push_back(Site{"s" + std::to_string(i),
                             static_cast<std::int64_t>(1 + gen() % 9), p});
    }
    // log-uniform between the product (boundary-feasible) and 1
    const double threshold = std::exp(uniform_open01(gen) * std::log(product));
    return build_instance(std::move(sites), threshold);
}

}  // namespace

TEST_CASE("greedy_upper_bound walks the cheapest prefix that covers the threshold") {
    const Instance inst = triple_half();
    CHECK(greedy_upper_bound(inst, to_linear_form(inst)) == 3);

    const Instance loose = build_instance({{"a", 7, 0.5}}, 1.0);
    CHECK(greedy_upper_bound(loose, to_linear_form(loose)) == 0);

    const Instance single = build_instance({{"a", 1, 0.5}}, 0.5);
    CHECK(greedy_upper_bound(single, to_linear_form(single)) == 1);
}

TEST_CASE("greedy_upper_bound rejects instances no selection can satisfy") {
    const Instance inst = build_instance({{"a", 1, 0.5}, {"b", 1, 0.5}}, 0.2);
    CHECK_THROWS_AS(greedy_upper_bound(inst, to_linear_form(inst)), Infeasible);
}

TEST_CASE("fill_table reproduces the single-site recursion") {
    const Instance inst = build_instance({{"a", 2, 0.5}}, 1.0);
    LinearForm lf;
    lf.a = {0.7};
    lf.b = 0.0;
    const DpTable t = fill_table(inst, lf, 2);
    const double neg_inf = -std::numeric_limits<double>::infinity();
    CHECK(t.value(0, 0) == 0.0);
    CHECK(t.value(0, 1) == neg_inf);
    CHECK(t.value(0, 2) == neg_inf);
    CHECK(t.value(1, 0) == 0.0);
    CHECK(t.value(1, 1) == neg_inf);
    CHECK(t.value(1, 2) == doctest::Approx(0.7));
    CHECK(t.took(1, 2));
    CHECK_FALSE(t.took(1, 0));
    CHECK(t.cells() == 6);
}

TEST_CASE("fill_table maximizes the margin at each exact cost") {
    const Instance inst = triple_half();
    const DpTable t = fill_table(inst, to_linear_form(inst), 3);
    // Best margin at cost exactly 3 combines the two cheapest sites.
    CHECK(t.value(3, 3) == doctest::Approx(2 * std::log(2.0)).epsilon(1e-12));
    // Columns cheaper than every site keep the empty-selection values.
    CHECK(t.value(3, 0) == 0.0);
    CHECK(t.value(1, 0) == 0.0);
}

TEST_CASE("table rows never lose margin as more sites become available") {
    std::mt19937_64 gen = substream(301, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const Instance inst = random_feasible(gen);
        const LinearForm lf = to_linear_form(inst);
        const DpTable t = fill_table(inst, lf, greedy_upper_bound(inst, lf));
        for (std::size_t i = 1; i < t.num_rows; ++i) {
            for (std::int64_t j = 0; j <= t.upper_bound; ++j) {
                CHECK(t.value(i, j) >= t.value(i - 1, j));
            }
        }
    }
}

TEST_CASE("take bits certify their own cells") {
    std::mt19937_64 gen = substream(302, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const Instance inst = random_feasible(gen);
        const LinearForm lf = to_linear_form(inst);
        const DpTable t = fill_table(inst, lf, greedy_upper_bound(inst, lf));
        for (std::size_t i = 1; i < t.num_rows; ++i) {
            for (std::int64_t j = 0; j <= t.upper_bound; ++j) {
                if (t.took(i, j)) {
                    REQUIRE(j >= inst.sites[i - 1].cost);
                    CHECK(t.value(i, j) ==
                          lf.a[i - 1] + t.value(i - 1, j - inst.sites[i - 1].cost));
                }
            }
        }
    }
}

TEST_CASE("extract_optimum finds the cheapest qualifying column") {
    const Instance inst = triple_half();
    const LinearForm lf = to_linear_form(inst);
    CHECK(extract_optimum(fill_table(inst, lf, 3), lf) == 3);

    const Instance loose = with_threshold(inst, 1.0);
    const LinearForm lf1 = to_linear_form(loose);
    CHECK(extract_optimum(fill_table(loose, lf1, 0), lf1) == 0);

    const Instance single = build_instance({{"a", 4, 0.5}}, 0.5);
    const LinearForm lf4 = to_linear_form(single);
    CHECK(extract_optimum(fill_table(single, lf4, 4), lf4) == 4);
}

TEST_CASE("extract_optimum reports when no column qualifies") {
    const Instance inst = triple_half();
    LinearForm lf = to_linear_form(inst);
    const DpTable t = fill_table(inst, lf, 3);
    lf.b = 100.0;  // unreachable requirement
    CHECK_THROWS_AS(extract_optimum(t, lf), NoQualifyingColumn);
}

TEST_CASE("backtrack reconstructs the selection behind the optimum column") {
    const Instance inst = triple_half();
    const LinearForm lf = to_linear_form(inst);
    const DpTable t = fill_table(inst, lf, 3);
    const Selection sel = backtrack(t, inst, 3);
    CHECK(sel.chosen == std::vector<std::uint8_t>{1, 1, 0});
    CHECK(sel.cost == 3);

    CHECK(backtrack(t, inst, 0).chosen == std::vector<std::uint8_t>{0, 0, 0});

    const Instance single = build_instance({{"a", 4, 0.5}}, 0.5);
    const LinearForm lf4 = to_linear_form(single);
    const DpTable t4 = fill_table(single, lf4, 4);
    CHECK(backtrack(t4, single, 4).chosen == std::vector<std::uint8_t>{1});
}

TEST_CASE("solve_dp refuses infeasible instances before building anything") {
    CHECK_THROWS_AS(solve_dp(build_instance({{"a", 1, 0.5}, {"b", 1, 0.5}}, 0.2)),
                    Infeasible);
}

TEST_CASE("solve_dp at threshold one selects nothing") {
    const SolveReport r = solve_dp(with_threshold(triple_half(), 1.0));
    CHECK(r.objective == 0);
    CHECK(r.selected_ids.empty());
    CHECK(r.status == SolveStatus::Optimal);
}

TEST_CASE("solve_dp matches the enumeration oracle on random instances") {
    std::mt19937_64 gen = substream(303, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const Instance inst = random_feasible(gen);
        const SolveReport r = solve_dp(inst);
        const auto best = oracle::min_cost(inst);
        REQUIRE(best.has_value());
        CHECK(r.objective == best->cost);
        // The report's own selection must price out to its objective and be
        // feasible under the direct product test.
        CHECK(r.outage_prob <= inst.threshold * std::exp(kFeasTol));
    }
}

TEST_CASE("solve_dp agrees with exhaustive_search including tie-breaking rules") {
    std::mt19937_64 gen = substream(304, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const Instance inst = random_feasible(gen, 10);
        const SolveReport dp = solve_dp(inst);
        const SolveReport ex = exhaustive_search(inst);
        CHECK(dp.objective == ex.objective);
    }
}

TEST_CASE("greedy upper bound is never below the optimum") {
    std::mt19937_64 gen = substream(305, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const Instance inst = random_feasible(gen);
        CHECK(greedy_upper_bound(inst, to_linear_form(inst)) >=
              solve_dp(inst).objective);
    }
}

TEST_CASE("solve_dp divides out the cost gcd and reports it") {
    const Instance base = triple_half();
    const Instance scaled =
        build_instance({{"a", 10, 0.5}, {"b", 20, 0.5}, {"c", 30, 0.5}}, 0.3);
    const SolveReport rb = solve_dp(base);
    const SolveReport rs = solve_dp(scaled);
    CHECK(rb.zeta == 1);
    CHECK(rs.zeta == 10);
    CHECK(rs.objective == 10 * rb.objective);
    CHECK(rs.table_cells == rb.table_cells);
    CHECK(rs.selected_ids == rb.selected_ids);
}

TEST_CASE("solve_dp table size equals rows times reduced-bound columns") {
    const SolveReport r = solve_dp(triple_half());
    CHECK(r.table_cells == (3 + 1) * (3 + 1));
}

TEST_CASE("exhaustive_search matches the oracle and its own contract") {
    const SolveReport r = exhaustive_search(triple_half());
    CHECK(r.objective == 3);
    CHECK(r.chosen == std::vector<std::uint8_t>{1, 1, 0});
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(r.table_cells == 0);

    const SolveReport loose = exhaustive_search(with_threshold(triple_half(), 1.0));
    CHECK(loose.objective == 0);
    CHECK(loose.selected_ids.empty());
}

TEST_CASE("exhaustive_search breaks cost ties toward the earliest selection") {
    // Both single-site picks are feasible at equal cost; the second site
    // alone comes first in leave-out-first enumeration order.
    const Instance inst = build_instance({{"a", 1, 0.5}, {"b", 1, 0.5}}, 0.5);
    const SolveReport r = exhaustive_search(inst);
    CHECK(r.objective == 1);
    CHECK(r.chosen == std::vector<std::uint8_t>{0, 1});
    CHECK(r.selected_ids == std::vector<std::string>{"b"});
}

TEST_CASE("exhaustive_search guards against oversized enumerations") {
    std::vector<Site> sites;
    for (int i = 0; i < 31; ++i) {
        sites.push_back(Site{"s" + std::to_string(i), 1, 0.5});
    }
    CHECK_THROWS_AS(exhaustive_search(build_instance(std::move(sites), 0.5)),
                    TooLargeForExhaustive);
    CHECK_THROWS_AS(exhaustive_search(build_instance({{"a", 1, 0.5}}, 0.4)),
                    Infeasible);
}

TEST_CASE("solver reports map selections back to the caller's site order") {
    // Sites arrive in descending cost; internally they are re-sorted, but
    // the report must speak the caller's language.
    const Instance inst =
        build_instance({{"pricey", 9, 0.3}, {"cheap", 1, 0.3}}, 0.3);
    const SolveReport r = solve_dp(inst);
    CHECK(r.objective == 1);
    CHECK(r.chosen == std::vector<std::uint8_t>{0, 1});
    CHECK(r.selected_ids == std::vector<std::string>{"cheap"});
}
