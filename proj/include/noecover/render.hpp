#pragma once

#include <string>

#include <json.hpp>

namespace noecover {

using Json = nlohmann::ordered_json;

// Deterministic plain-text rendering of a report object: "key: value" lines,
// two-space nesting, scalar arrays inline. Text and JSON outputs are both
// produced from the same object, so they always carry the same content.
std::string render_text(const Json& j);

std::string render_json(const Json& j);

} // namespace noecover
