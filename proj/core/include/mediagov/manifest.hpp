#pragma once

#include <cstdint>
#include <string>

#include "mediagov/kv_config.hpp"

namespace mediagov {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Record of one command invocation: the resolved configuration (every
/// parameter and seed that determined the outputs), the artifacts written,
/// and the wall-clock duration. Written as flat key-value text. The
/// configuration entries are sufficient to re-run the command and, for
/// deterministic commands, reproduce the artifacts byte for byte (the
/// duration is informational and excluded from any determinism contract).
struct RunManifest {
  std::string command;
  KvPairs config;                      // resolved settings, insertion order
  std::vector<std::string> artifacts;  // files written by the run
  double duration_seconds = 0.0;

  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, double value);
  void set(const std::string& key, std::int64_t value);
  void set(const std::string& key, std::uint64_t value);
  void set(const std::string& key, bool value);

  KvPairs to_kv() const;
};

void write_manifest(const std::string& path, const RunManifest& m);

}  // namespace mediagov
