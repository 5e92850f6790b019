#pragma once

#include <filesystem>

#include <json.hpp>

#include "gssel/instance.hpp"

namespace gssel {

/// Builds an Instance from its JSON form:
///   { "threshold": 0.01,
///     "sites": [ { "id": "gs1", "cost": 3, "p": 0.25 }, ... ] }
/// Costs must be integers (a JSON 3.0 is accepted, 3.5 is not). Throws
/// ParseError with the offending field path, then the usual validation
/// errors from build_instance.
Instance parse_instance(const nlohmann::json& j);

/// Serializes back to the schema above, restoring the caller's original
/// site order so load/save round-trips preserve the file.
nlohmann::json instance_to_json(const Instance& inst);

/// Reads and parses an instance file. Throws ParseError when the file
/// cannot be opened or does not contain valid JSON.
Instance load_instance(const std::filesystem::path& path);

/// Writes `inst` as pretty-printed JSON. Throws IoError on failure.
void save_instance(const Instance& inst, const std::filesystem::path& path);

}  // namespace gssel
