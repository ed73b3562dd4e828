#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qmut/quiver.hpp"

namespace qmut::io {

// Text format, 1-based vertices:
//   n <count>
//   <i> <j> <w>     (w arrows i -> j)
// '#' starts a comment; blank lines are ignored.
Quiver parse_text(std::string_view text);
std::string to_text(const Quiver& q);

// {"n": int, "arrows": [[i, j, w], ...]} with 1-based vertices and an
// optional "labels" array. Weights beyond 64 bits travel as decimal strings.
Quiver from_json(const nlohmann::json& j);
nlohmann::json to_json(const Quiver& q);
Quiver parse_json(std::string_view text);

// Picks the format from the first non-space character ('{' means JSON).
Quiver parse_any(std::string_view text);
Quiver read_file(const std::filesystem::path& path);

nlohmann::json int_to_json(const Int& x);
Int int_from_json(const nlohmann::json& j);

}  // namespace qmut::io
