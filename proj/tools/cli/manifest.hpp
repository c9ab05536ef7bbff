#pragma once

// Run manifests: every output directory carries manifest.json recording the
// command, its full parameter set, the tool version and a SHA-256 per file.

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace kinkfac::cli {

struct OutputFile {
  std::string name;  // relative to the output directory
  std::string sha256;
};

struct RunManifest {
  std::string command;
  nlohmann::ordered_json parameters;
  std::vector<std::string> command_line;  // argv that reproduces the run
  std::string version;
  std::vector<OutputFile> outputs;

  nlohmann::ordered_json to_json() const;
  static RunManifest from_json(const nlohmann::ordered_json& j);
};

inline constexpr const char* kManifestName = "manifest.json";

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::filesystem::path& path);

void write_manifest(const std::filesystem::path& dir, const RunManifest& manifest);
RunManifest read_manifest(const std::filesystem::path& dir);

/// Recomputes each recorded checksum. Returns the names that do not match
/// (missing files included); empty means the directory verifies.
std::vector<std::string> verify_manifest(const std::filesystem::path& dir);

}  // namespace kinkfac::cli
