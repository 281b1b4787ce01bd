#include "mediagov/kv_config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mediagov {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

KvPairs parse_kv_text(const std::string& text) {
  KvPairs kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::string key, value;
    const auto eq = t.find('=');
    if (eq != std::string::npos) {
      key = trim(t.substr(0, eq));
      value = trim(t.substr(eq + 1));
    } else {
      const auto ws = t.find_first_of(" \t");
      if (ws == std::string::npos) {
        throw std::invalid_argument("malformed key-value line: " + t);
      }
      key = trim(t.substr(0, ws));
      value = trim(t.substr(ws + 1));
    }
    if (key.empty()) throw std::invalid_argument("malformed key-value line: " + t);
    kv.emplace_back(key, value);
  }
  return kv;
}

KvPairs read_kv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_kv_text(ss.str());
}

std::string format_kv_text(const KvPairs& kv) {
  std::ostringstream out;
  for (const auto& [k, v] : kv) out << k << " = " << v << "\n";
  return out.str();
}

void write_kv_file(const std::string& path, const KvPairs& kv) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << format_kv_text(kv);
}

GameParams params_from_kv(const KvPairs& kv, GameParams base) {
  for (const auto& [key, value] : kv) {
    double* slot = param_by_name(base, key);
    if (!slot) throw std::invalid_argument("unknown parameter key: " + key);
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE) {
      throw std::invalid_argument("parameter " + key + " has non-numeric value: " + value);
    }
    *slot = v;
  }
  return base;
}

KvPairs params_to_kv(const GameParams& p) {
  KvPairs kv;
  for (std::string_view name : kParamNames) {
    std::ostringstream v;
    v.precision(17);
    v << *param_by_name(p, name);
    kv.emplace_back(std::string(name), v.str());
  }
  return kv;
}

}  // namespace mediagov
