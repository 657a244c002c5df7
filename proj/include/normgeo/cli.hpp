#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "normgeo/vector.hpp"

namespace normgeo::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUniversalFailure = 2;
inline constexpr int kExitViolated = 3;

/// Entry point of the `normgeo` tool. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0,2" -> (0, 2); decimal or scientific literals. Throws DomainError.
Vector parse_vector(std::string_view text);

/// Writes `contents` to a sibling temp file, then renames it over `path`.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace normgeo::cli
