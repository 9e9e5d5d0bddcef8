#include "manifest.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "routesim/version.hpp"

namespace routesim::cli {

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream body;
  body << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failed on " + path.string());
  return std::move(body).str();
}

std::string fnv1a64_file(const std::filesystem::path& path) {
  return fnv1a64(read_text_file(path));
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out.good()) throw std::runtime_error("short write to " + path.string());
}

void RunManifest::add_input(const std::filesystem::path& path) {
  inputs.emplace_back(path.string(), fnv1a64_file(path));
}

void RunManifest::add_output(const std::filesystem::path& path, std::string_view content) {
  outputs.emplace_back(path.filename().string(), fnv1a64(content));
}

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = "routesim";
  j["version"] = kVersion;
  j["command"] = command;
  j["parameters"] = parameters;
  j["argv"] = argv;
  auto files = [](const std::vector<std::pair<std::string, std::string>>& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [name, digest] : v) arr.push_back({{"path", name}, {"fnv1a64", digest}});
    return arr;
  };
  j["inputs"] = files(inputs);
  j["outputs"] = files(outputs);
  return j;
}

void RunManifest::write(const std::filesystem::path& path) const {
  write_text_file(path, to_json().dump(2) + "\n");
}

}  // namespace routesim::cli
