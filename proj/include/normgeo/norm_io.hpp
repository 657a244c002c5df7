#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "normgeo/norm.hpp"

namespace normgeo {

// Norm spec files are JSON objects:
//   {"kind":"lp","p":1,"dim":2}
//   {"kind":"lp","p":"inf","dim":4}
//   {"kind":"weighted_lp","p":2,"weights":[...],"dim":n}
//   {"kind":"quadratic","gram":[[...],...],"dim":n}
// Keys outside the set allowed for the kind are rejected.

/// Throws SpecParseError on malformed text or schema violations. The
/// result is not yet validated as a norm; construct a Norm from it.
NormSpec parse_norm_spec(std::string_view json_text);
NormSpec load_norm_spec(const std::filesystem::path& path);

nlohmann::json norm_spec_to_json(const NormSpec& spec);

}  // namespace normgeo
