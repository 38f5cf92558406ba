#pragma once

#include "snortcgt/position.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace snort {

// JSON form:
//   { "vertices": [{"id": "1", "tint": "none"|"blue"|"red"}, ...],
//     "edges": [["1","2"], ...] }
nlohmann::ordered_json position_to_json(const Position& p);
Position position_from_json(const nlohmann::json& j);

// Plain text form: one "u v" edge per line; a lone token declares an isolated
// vertex; optional "blue: u,v,..." / "red: ..." lines tint vertices.
// '#' starts a comment.
Position position_from_edge_list(std::string_view text);

// Loads either format; files ending in .json or starting with '{' are JSON.
Position load_position_file(const std::string& path);

}  // namespace snort
