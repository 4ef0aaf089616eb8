#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace equirag {

/// Reads a whole file; throws IoError if missing or unreadable.
std::string read_file(const std::filesystem::path& path);

/// Writes bytes, creating parent directories. Throws IoError on failure.
void write_file(const std::filesystem::path& path, std::string_view bytes);

/// Non-recursive listing of regular files with one of the given extensions
/// (e.g. {".txt", ".jsonl"}), sorted by filename for deterministic ingestion.
std::vector<std::filesystem::path> list_files(const std::filesystem::path& dir,
                                              const std::vector<std::string>& extensions);

/// Splits file contents into lines, dropping a trailing empty line. Keeps
/// interior empty lines so JSONL line numbers stay aligned with the input.
std::vector<std::string> split_lines(std::string_view text);

}  // namespace equirag
