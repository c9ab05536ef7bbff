#include "cli/manifest.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>

#include <fmt/format.h>

#include "cli/io.hpp"

namespace kinkfac::cli {

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["version"] = version;
  j["parameters"] = parameters;
  j["command_line"] = command_line;
  auto files = nlohmann::ordered_json::array();
  for (const auto& f : outputs) files.push_back({{"file", f.name}, {"sha256", f.sha256}});
  j["outputs"] = files;
  return j;
}

RunManifest RunManifest::from_json(const nlohmann::ordered_json& j) {
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.version = j.at("version").get<std::string>();
  m.parameters = j.at("parameters");
  m.command_line = j.at("command_line").get<std::vector<std::string>>();
  for (const auto& f : j.at("outputs")) {
    m.outputs.push_back({f.at("file").get<std::string>(), f.at("sha256").get<std::string>()});
  }
  return m;
}

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw IoError("sha256 computation failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

std::string sha256_file(const std::filesystem::path& path) { return sha256_hex(read_file(path)); }

void write_manifest(const std::filesystem::path& dir, const RunManifest& manifest) {
  write_file(dir / kManifestName, manifest.to_json().dump(2) + "\n");
}

RunManifest read_manifest(const std::filesystem::path& dir) {
  const std::string text = read_file(dir / kManifestName);
  try {
    return RunManifest::from_json(nlohmann::ordered_json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw IoError(fmt::format("malformed manifest in {}: {}", dir.string(), e.what()));
  }
}

std::vector<std::string> verify_manifest(const std::filesystem::path& dir) {
  std::vector<std::string> bad;
  for (const auto& f : read_manifest(dir).outputs) {
    const auto path = dir / f.name;
    if (!std::filesystem::exists(path) || sha256_file(path) != f.sha256) bad.push_back(f.name);
  }
  return bad;
}

}  // namespace kinkfac::cli
