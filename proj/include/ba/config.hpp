#pragma once

#include <string>

#include "ba/limits.hpp"
#include "json.hpp"

namespace ba {

// Limits as a JSON config file. Unknown keys are rejected so typos
// surface instead of silently running with defaults.
Limits config_from_json(const nlohmann::json& j, const Limits& base);
nlohmann::json config_to_json(const Limits& l);
Limits load_config(const std::string& path, const Limits& base);

}  // namespace ba
