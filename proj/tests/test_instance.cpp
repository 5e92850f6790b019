#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "gssel/errors.hpp"
#include "gssel/instance.hpp"
#include "gssel/instance_io.hpp"
#include "gssel/rng.hpp"
#include "oracle.hpp"

using namespace gssel;

namespace {

Instance triple_half() {
    // Three sites, costs 1/2/3, every outage probability one half.
    return build_instance({{"a", 1, 0.5}, {"b", 2, 0.5}, {"c", 3, 0.5}}, 0.3);
}

}  // namespace

TEST_CASE("build_instance validates its inputs") {
    CHECK_THROWS_AS(build_instance({}, 0.5), EmptyCatalog);
    CHECK_THROWS_AS(build_instance({{"a", 0, 0.5}}, 0.5), NonPositiveCost);
    CHECK_THROWS_AS(build_instance({{"a", -3, 0.5}}, 0.5), NonPositiveCost);
    CHECK_THROWS_AS(build_instance({{"a", 1, 0.0}}, 0.5), ProbabilityOutOfRange);
    CHECK_THROWS_AS(build_instance({{"a", 1, 1.2}}, 0.5), ProbabilityOutOfRange);
    CHECK_THROWS_AS(build_instance({{"a", 1, std::nan("")}}, 0.5), ProbabilityOutOfRange);
    CHECK_THROWS_AS(build_instance({{"a", 1, 0.5}}, 0.0), ThresholdOutOfRange);
    CHECK_THROWS_AS(build_instance({{"a", 1, 0.5}}, 1.5), ThresholdOutOfRange);
    CHECK_THROWS_AS(build_instance({{"a", 1, 0.5}}, -0.1), ThresholdOutOfRange);
    // Boundary values that must be accepted.
    CHECK_NOTHROW(build_instance({{"a", 1, 1.0}}, 1.0));
}

TEST_CASE("build_instance sorts by cost and remembers the original order") {
    const Instance inst =
        build_instance({{"x", 3, 0.5}, {"y", 1, 0.6}, {"z", 2, 0.7}}, 0.9);
    REQUIRE(inst.size() == 3);
    CHECK(inst.sites[0].id == "y");
    CHECK(inst.sites[1].id == "z");
    CHECK(inst.sites[2].id == "x");
    CHECK(inst.original_order == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("cost ties keep the order the caller gave") {
    const Instance inst =
        build_instance({{"first", 2, 0.5}, {"second", 2, 0.6}, {"third", 1, 0.7}}, 0.9);
    CHECK(inst.sites[0].id == "third");
    CHECK(inst.sites[1].id == "first");
    CHECK(inst.sites[2].id == "second");
}

TEST_CASE("to_linear_form takes negative logs of probabilities and threshold") {
    const Instance inst = triple_half();
    const LinearForm lf = to_linear_form(inst);
    REQUIRE(lf.a.size() == 3);
    for (double a : lf.a) {
        CHECK(a == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    }
    CHECK(lf.b == doctest::Approx(-std::log(0.3)).epsilon(1e-12));
}

TEST_CASE("check_feasible matches the all-sites product") {
    CHECK_FALSE(check_feasible(build_instance({{"a", 1, 0.5}, {"b", 1, 0.5}}, 0.2)));
    CHECK(check_feasible(build_instance({{"a", 1, 0.5}, {"b", 1, 0.5}}, 0.3)));
    // Exact boundary: the product equals the threshold.
    CHECK(check_feasible(build_instance({{"a", 1, 0.5}, {"b", 1, 0.5}}, 0.25)));
}

TEST_CASE("evaluate sums costs exactly and margins in the log domain") {
    const Instance inst = triple_half();
    const Selection full = evaluate(inst, std::vector<std::uint8_t>{1, 1, 1});
    CHECK(full.cost == 6);

    const Selection partial = evaluate(inst, std::vector<std::uint8_t>{1, 1, 0});
    CHECK(partial.cost == 3);
    CHECK(partial.log_margin == doctest::Approx(2 * std::log(2.0)).epsilon(1e-12));
    CHECK(outage_probability(inst, partial.chosen) == doctest::Approx(0.25).epsilon(1e-12));

    CHECK_THROWS_AS(evaluate(inst, std::vector<std::uint8_t>{1, 1}), LengthMismatch);
    CHECK_THROWS_AS(outage_probability(inst, std::vector<std::uint8_t>{1}), LengthMismatch);
}

TEST_CASE("empty selection has cost zero and outage probability one") {
    const Instance inst = triple_half();
    const Selection none = evaluate(inst, std::vector<std::uint8_t>{0, 0, 0});
    CHECK(none.cost == 0);
    CHECK(none.log_margin == 0.0);
    CHECK(outage_probability(inst, none.chosen) == 1.0);
}

TEST_CASE("gcd_reduce divides costs by their common divisor") {
    const Instance a = build_instance({{"a", 2, 0.5}, {"b", 4, 0.5}, {"c", 6, 0.5}}, 0.5);
    const GcdReduced ra = gcd_reduce(a);
    CHECK(ra.zeta == 2);
    CHECK(ra.instance.sites[0].cost == 1);
    CHECK(ra.instance.sites[1].cost == 2);
    CHECK(ra.instance.sites[2].cost == 3);
    CHECK(ra.instance.threshold == a.threshold);

    const Instance b = build_instance({{"a", 3, 0.5}, {"b", 5, 0.5}}, 0.5);
    CHECK(gcd_reduce(b).zeta == 1);
    CHECK(gcd_reduce(b).instance.sites[0].cost == 3);
}

TEST_CASE("gcd_reduce preserves the optimal selection up to cost scale") {
    const Instance inst =
        build_instance({{"a", 10, 0.5}, {"b", 10, 0.4}, {"c", 10, 0.6}}, 0.3);
    const GcdReduced red = gcd_reduce(inst);
    REQUIRE(red.zeta == 10);
    const auto base = oracle::min_cost(inst);
    const auto reduced = oracle::min_cost(red.instance);
    REQUIRE(base.has_value());
    REQUIRE(reduced.has_value());
    CHECK(base->cost == reduced->cost * red.zeta);
    CHECK(base->chosen == reduced->chosen);
}

TEST_CASE("with_threshold retargets an instance and validates the new value") {
    const Instance inst = triple_half();
    const Instance tight = with_threshold(inst, 0.01);
    CHECK(tight.threshold == 0.01);
    CHECK(tight.sites.size() == inst.sites.size());
    CHECK_THROWS_AS(with_threshold(inst, 0.0), ThresholdOutOfRange);
    CHECK_THROWS_AS(with_threshold(inst, 2.0), ThresholdOutOfRange);
}

TEST_CASE("log margins and probability products agree to 1e-9 relative") {
    std::mt19937_64 gen = substream(911, 0);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t k = 1 + gen() % 12;
        std::vector<Site> sites;
        std::vector<std::uint8_t> chosen_user(k);
        for (std::size_t i = 0; i < k; ++i) {
            sites.push_back(Site{"s" + std::to_string(i),
                                 static_cast<std::int64_t>(1 + gen() % 9),
                                 uniform_open(gen, 0.05, 1.0)});
            chosen_user[i] = gen() % 2;
        }
        const Instance inst = build_instance(std::move(sites), 0.5);
        // Map the user-order picks into the internal order for evaluate.
        std::vector<std::uint8_t> chosen(k);
        for (std::size_t i = 0; i < k; ++i) {
            chosen[i] = chosen_user[inst.original_order[i]];
        }
        const Selection sel = evaluate(inst, chosen);
        const double direct = outage_probability(inst, chosen);
        CHECK(std::exp(-sel.log_margin) ==
              doctest::Approx(direct).epsilon(1e-9));
    }
}

TEST_CASE("feasibility is exactly the all-ones margin test") {
    std::mt19937_64 gen = substream(912, 0);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t k = 1 + gen() % 10;
        std::vector<Site> sites;
        for (std::size_t i = 0; i < k; ++i) {
            sites.push_back(Site{"s" + std::to_string(i), 1,
                                 uniform_open(gen, 0.1, 1.0)});
        }
        const double threshold = uniform_open(gen, 0.0, 1.0);
        const Instance inst = build_instance(std::move(sites), threshold);
        const Selection all = evaluate(inst, std::vector<std::uint8_t>(k, 1));
        const LinearForm lf = to_linear_form(inst);
        CHECK(check_feasible(inst) == (all.log_margin >= lf.b - kFeasTol));
    }
}

TEST_CASE("parse_instance reports the offending field path") {
    using nlohmann::json;
    CHECK_THROWS_AS(parse_instance(json::array()), ParseError);
    CHECK_THROWS_AS(parse_instance(json{{"sites", json::array()}}), ParseError);
    CHECK_THROWS_AS(parse_instance(json{{"threshold", 0.5}}), ParseError);

    const auto check_message = [](const json& j, const char* needle) {
        try {
            parse_instance(j);
            FAIL_CHECK("expected a parse failure mentioning " << needle);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    check_message(json{{"threshold", "oops"}, {"sites", json::array()}}, "threshold");
    check_message(json{{"threshold", 0.5}, {"sites", 7}}, "sites");
    check_message(json{{"threshold", 0.5},
                       {"sites", json::array({json{{"id", "a"}, {"cost", 1}}})}},
                  "sites[0].p");
    check_message(json{{"threshold", 0.5},
                       {"sites", json::array({json{{"id", "a"}, {"cost", 2.5}, {"p", 0.5}}})}},
                  "sites[0].cost");
    check_message(json{{"threshold", 0.5},
                       {"sites", json::array({json{{"cost", 1}, {"p", 0.5}}})}},
                  "sites[0].id");
}

TEST_CASE("parse_instance accepts integral floats as costs") {
    using nlohmann::json;
    const Instance inst = parse_instance(
        json{{"threshold", 0.5},
             {"sites", json::array({json{{"id", "a"}, {"cost", 3.0}, {"p", 0.5}}})}});
    CHECK(inst.sites[0].cost == 3);
}

TEST_CASE("instance save/load round-trips the user's site order") {
    namespace fs = std::filesystem;
    const Instance inst =
        build_instance({{"x", 3, 0.123456789012345}, {"y", 1, 0.6}, {"z", 2, 0.7}}, 0.05);
    const fs::path path = fs::temp_directory_path() / "gssel_roundtrip_instance.json";
    save_instance(inst, path);
    const Instance back = load_instance(path);
    fs::remove(path);

    REQUIRE(back.size() == inst.size());
    const nlohmann::json j = instance_to_json(back);
    CHECK(j.at("sites")[0].at("id") == "x");
    CHECK(j.at("sites")[1].at("id") == "y");
    CHECK(j.at("sites")[2].at("id") == "z");
    CHECK(back.threshold == inst.threshold);
    // Probabilities survive the decimal round trip bit-exactly.
    CHECK(back.sites[0].outage_prob == inst.sites[0].outage_prob);
    CHECK(back.sites[2].outage_prob == inst.sites[2].outage_prob);
}

TEST_CASE("load_instance rejects missing files and bad JSON") {
    namespace fs = std::filesystem;
    CHECK_THROWS_AS(load_instance("/nonexistent/nowhere.json"), ParseError);
    const fs::path path = fs::temp_directory_path() / "gssel_bad_instance.json";
    std::ofstream(path) << "{not json";
    CHECK_THROWS_AS(load_instance(path), ParseError);
    fs::remove(path);
}
