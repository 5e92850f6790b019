#include "gssel/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "gssel/errors.hpp"

namespace gssel {

namespace {

double require_number(const nlohmann::json& j, const std::string& path) {
    if (!j.is_number()) {
        throw ParseError(path, "expected a number, got " + std::string(j.type_name()));
    }
    return j.get<double>();
}

std::int64_t require_integer(const nlohmann::json& j, const std::string& path) {
    if (j.is_number_integer() || j.is_number_unsigned()) {
        return j.get<std::int64_t>();
    }
    // Tolerate 3.0 written by another tool, but not a genuine fraction.
    if (j.is_number_float()) {
        const double v = j.get<double>();
        if (std::isfinite(v) && v == std::floor(v)) {
            return static_cast<std::int64_t>(v);
        }
    }
    throw ParseError(path, "expected an integer, got " + j.dump());
}

}  // namespace

Instance parse_instance(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ParseError("$", "expected a JSON object, got " + std::string(j.type_name()));
    }
    if (!j.contains("threshold")) {
        throw ParseError("threshold", "missing required field");
    }
    if (!j.contains("sites")) {
        throw ParseError("sites", "missing required field");
    }
    const double threshold = require_number(j.at("threshold"), "threshold");

    const nlohmann::json& sites_json = j.at("sites");
    if (!sites_json.is_array()) {
        throw ParseError("sites", "expected an array, got " +
                                      std::string(sites_json.type_name()));
    }

    std::vector<Site> sites;
    sites.reserve(sites_json.size());
    for (std::size_t k = 0; k < sites_json.size(); ++k) {
        const std::string path = "sites[" + std::to_string(k) + "]";
        const nlohmann::json& sj = sites_json[k];
        if (!sj.is_object()) {
            throw ParseError(path, "expected an object, got " + std::string(sj.type_name()));
        }
        Site s;
        if (!sj.contains("id")) {
            throw ParseError(path + ".id", "missing required field");
        }
        if (!sj.at("id").is_string()) {
            throw ParseError(path + ".id", "expected a string, got " +
                                               std::string(sj.at("id").type_name()));
        }
        s.id = sj.at("id").get<std::string>();
        if (!sj.contains("cost")) {
            throw ParseError(path + ".cost", "missing required field");
        }
        s.cost = require_integer(sj.at("cost"), path + ".cost");
        if (!sj.contains("p")) {
            throw ParseError(path + ".p", "missing required field");
        }
        s.outage_prob = require_number(sj.at("p"), path + ".p");
        sites.push_back(std::move(s));
    }

    return build_instance(std::move(sites), threshold);
}

nlohmann::json instance_to_json(const Instance& inst) {
    // Undo the internal cost-ascending permutation so the emitted file lists
    // sites in the order the caller supplied them.
    std::vector<const Site*> user_order(inst.size(), nullptr);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        user_order[inst.original_order[i]] = &inst.sites[i];
    }

    nlohmann::json sites = nlohmann::json::array();
    for (const Site* s : user_order) {
        sites.push_back({{"id", s->id}, {"cost", s->cost}, {"p", s->outage_prob}});
    }
    return {{"threshold", inst.threshold}, {"sites", std::move(sites)}};
}

Instance load_instance(const std::filesystem::path& path) {
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
    return parse_instance(j);
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << instance_to_json(inst).dump(2) << '\n';
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

}  // namespace gssel
