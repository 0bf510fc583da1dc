#pragma once

#include <string>

namespace hausmorph {

/// Writes `content` to a sibling temporary file and renames it over `path`,
/// so readers never observe a partially written file.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

}  // namespace hausmorph
