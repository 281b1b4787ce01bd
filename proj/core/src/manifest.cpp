#include "mediagov/manifest.hpp"

#include <cstdio>

namespace mediagov {

void RunManifest::set(const std::string& key, const std::string& value) {
  config.emplace_back(key, value);
}

void RunManifest::set(const std::string& key, double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  config.emplace_back(key, buf);
}

void RunManifest::set(const std::string& key, std::int64_t value) {
  config.emplace_back(key, std::to_string(value));
}

void RunManifest::set(const std::string& key, std::uint64_t value) {
  config.emplace_back(key, std::to_string(value));
}

void RunManifest::set(const std::string& key, bool value) {
  config.emplace_back(key, value ? "true" : "false");
}

KvPairs RunManifest::to_kv() const {
  KvPairs kv;
  kv.emplace_back("command", command);
  kv.emplace_back("version", std::string(kToolVersion));
  kv.insert(kv.end(), config.begin(), config.end());
  for (std::size_t i = 0; i < artifacts.size(); ++i) {
    kv.emplace_back("artifact_" + std::to_string(i), artifacts[i]);
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", duration_seconds);
  kv.emplace_back("duration_seconds", buf);
  return kv;
}

void write_manifest(const std::string& path, const RunManifest& m) {
  write_kv_file(path, m.to_kv());
}

}  // namespace mediagov
