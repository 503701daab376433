#pragma once

// Family files: {"n": int, "cycles": [[v, ...], ...]}; cycle i has color i.

#include <string>

#include "json.hpp"
#include "rainbow/core.hpp"

namespace rainbow {

nlohmann::json family_to_json(const Family& fam);
// Throws kMalformedInput for structural JSON problems; validation errors of
// the cycles themselves keep their own codes.
Family family_from_json(const nlohmann::json& j);

Family read_family_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace rainbow
