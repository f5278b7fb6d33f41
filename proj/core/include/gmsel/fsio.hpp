#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace gmsel {

/// Read a whole file into a string. Throws std::runtime_error on failure.
std::string read_text_file(const std::filesystem::path& path);

/// Write `data` to `path` atomically: write to a temp file in the same
/// directory, flush, then rename over the target.
void atomic_write_file(const std::filesystem::path& path, const std::string& data);
void atomic_write_file(const std::filesystem::path& path, const void* data, size_t size);

/// FNV-1a 64-bit hash, hex-encoded. Stable across platforms and runs.
std::string fnv1a_hex(const std::string& data);

/// List regular files in `dir` with the given extension, sorted by filename.
std::vector<std::filesystem::path> list_files(const std::filesystem::path& dir,
                                              const std::string& extension);

}  // namespace gmsel
