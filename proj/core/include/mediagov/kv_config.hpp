#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mediagov/params.hpp"

namespace mediagov {

/// Flat key-value text format used for config files, run manifests and ABM
/// sidecar metadata. One `key = value` per line; blank lines and lines
/// starting with '#' are ignored; `key value` (whitespace separated) is
/// also accepted on read. Order is preserved.
using KvPairs = std::vector<std::pair<std::string, std::string>>;

KvPairs read_kv_file(const std::string& path);  // throws std::runtime_error if unreadable
KvPairs parse_kv_text(const std::string& text);
void write_kv_file(const std::string& path, const KvPairs& kv);
std::string format_kv_text(const KvPairs& kv);

/// Applies the game-parameter keys (b_u, c_u, b_c, c_c, c_i, q) found in kv
/// on top of base. Throws std::invalid_argument on an unknown key or a
/// value that does not parse as a number.
GameParams params_from_kv(const KvPairs& kv, GameParams base = {});

KvPairs params_to_kv(const GameParams& p);

}  // namespace mediagov
