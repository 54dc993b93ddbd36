#pragma once

#include <filesystem>
#include <string>

namespace emocause {

// Shortest decimal representation that round-trips the exact double.
std::string fmt_double(double v);

// Writes content to a temp file in the target directory, then renames it
// over the destination.
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace emocause
