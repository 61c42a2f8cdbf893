#pragma once

#include <filesystem>
#include <string_view>

namespace euclid {

// Writes `content` to a sibling temporary file and renames it over `path`,
// so readers never observe a partially written file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace euclid
