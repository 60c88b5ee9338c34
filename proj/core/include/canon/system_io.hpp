#pragma once

#include "canon/canonical.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace canon {

// Text format: "vars <n>" then one equation per line
// ("x<i> = 1", "x<i> + x<j> = x<k>", "x<i> * x<j> = x<k>"); '#' starts a
// comment line, blank lines are skipped.
CanonicalSystem parse_system(std::string_view text);
std::string serialize_system(const CanonicalSystem& sys);

nlohmann::json system_to_json(const CanonicalSystem& sys);
CanonicalSystem system_from_json(const nlohmann::json& j);

}  // namespace canon
