#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace routesim::cli {

/// FNV-1a 64 as a 16-digit hex string; identity for change detection, not
/// security.
std::string fnv1a64(std::string_view bytes);
std::string fnv1a64_file(const std::filesystem::path& path);

/// Record of one command invocation. `argv` holds a replayable command line
/// with every random or defaulted choice resolved; thread count and output
/// directory are left out since they never change the results.
struct RunManifest {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::string> argv;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> outputs;

  void add_input(const std::filesystem::path& path);
  void add_output(const std::filesystem::path& path, std::string_view content);

  nlohmann::ordered_json to_json() const;
  void write(const std::filesystem::path& path) const;
};

/// Writes content to path, failing loudly; parent directories must exist.
void write_text_file(const std::filesystem::path& path, std::string_view content);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace routesim::cli
