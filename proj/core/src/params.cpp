#include "mediagov/params.hpp"

#include <cmath>
#include <stdexcept>

namespace mediagov {

std::string_view to_string(UserStrategy s) {
  switch (s) {
    case UserStrategy::AllD: return "AllD";
    case UserStrategy::BMedia: return "BMedia";
    case UserStrategy::GMedia: return "GMedia";
    case UserStrategy::AllC: return "AllC";
  }
  return "?";
}

std::string_view to_string(CreatorStrategy s) {
  return s == CreatorStrategy::Unsafe ? "Unsafe" : "Safe";
}

std::optional<UserStrategy> user_strategy_from_string(std::string_view name) {
  for (UserStrategy s : kAllUserStrategies) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

std::optional<CreatorStrategy> creator_strategy_from_string(std::string_view name) {
  for (CreatorStrategy s : kAllCreatorStrategies) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

GameParams validate_params(const GameParams& p) {
  const auto bad = [](const std::string& what) { throw std::invalid_argument(what); };
  for (std::string_view name : kParamNames) {
    const double v = *param_by_name(p, name);
    if (!std::isfinite(v)) bad("parameter " + std::string(name) + " is not finite");
  }
  if (p.q < 0.0 || p.q > 1.0) bad("q must lie in [0, 1]");
  if (p.b_u < 0.0) bad("b_u must be >= 0");
  if (p.c_u < 0.0) bad("c_u must be >= 0");
  if (p.b_c < 0.0) bad("b_c must be >= 0");
  if (p.c_i < 0.0) bad("c_i must be >= 0");
  return p;
}

std::vector<std::string> param_warnings(const GameParams& p) {
  std::vector<std::string> w;
  if (p.c_u <= p.b_u) {
    w.push_back("c_u <= b_u: unsafe adoption no longer outweighs the safe benefit");
  }
  return w;
}

double* param_by_name(GameParams& p, std::string_view name) {
  if (name == "b_u") return &p.b_u;
  if (name == "c_u") return &p.c_u;
  if (name == "b_c") return &p.b_c;
  if (name == "c_c") return &p.c_c;
  if (name == "c_i") return &p.c_i;
  if (name == "q") return &p.q;
  return nullptr;
}

const double* param_by_name(const GameParams& p, std::string_view name) {
  return param_by_name(const_cast<GameParams&>(p), name);
}

}  // namespace mediagov
