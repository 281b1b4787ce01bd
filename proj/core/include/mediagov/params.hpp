#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mediagov {

/// User strategies, in the frozen index order used by every frequency
/// vector, CSV column and plot series.
enum class UserStrategy : int { AllD = 0, BMedia = 1, GMedia = 2, AllC = 3 };

/// Creator strategies. Unsafe = defect (D), Safe = cooperate (C).
enum class CreatorStrategy : int { Unsafe = 0, Safe = 1 };

inline constexpr int kNumUserStrategies = 4;
inline constexpr int kNumCreatorStrategies = 2;

inline constexpr std::array<UserStrategy, 4> kAllUserStrategies = {
    UserStrategy::AllD, UserStrategy::BMedia, UserStrategy::GMedia, UserStrategy::AllC};
inline constexpr std::array<CreatorStrategy, 2> kAllCreatorStrategies = {
    CreatorStrategy::Unsafe, CreatorStrategy::Safe};

std::string_view to_string(UserStrategy s);
std::string_view to_string(CreatorStrategy s);
std::optional<UserStrategy> user_strategy_from_string(std::string_view name);
std::optional<CreatorStrategy> creator_strategy_from_string(std::string_view name);

/// Payoff and quality parameters of the user/creator game.
///
///   b_u  benefit a user receives when adopting a safe technology
///   c_u  cost a user incurs when adopting an unsafe technology
///   b_c  benefit a creator receives when their technology is adopted
///   c_c  surplus cost of creating safe technology (unsafe normalised to 0)
///   c_i  cost of an informed recommendation
///   q    probability that an informed recommendation is correct
///
/// Defaults are the baseline experiment profile.
struct GameParams {
  double b_u = 0.4;
  double c_u = 0.8;
  double b_c = 0.4;
  double c_c = 0.1;
  double c_i = 0.1;
  double q = 0.9;
};

/// Returns p unchanged if all invariants hold, otherwise throws
/// std::invalid_argument. Invariants: q in [0,1]; b_u, c_u, b_c, c_i >= 0;
/// all values finite. c_c may be any real (negative c_c is a legitimate
/// regime for stability studies; command-line defaults keep it >= 0).
GameParams validate_params(const GameParams& p);

/// Non-fatal advisories. Currently: c_u <= b_u leaves the modelled regime
/// (losing from unsafe adoption is assumed to outweigh the safe benefit).
/// Sweeps may legitimately cross this, so it is not an error.
std::vector<std::string> param_warnings(const GameParams& p);

/// Parameter name <-> member access for config files, CLI flags and sweep
/// axes. Valid names: b_u, c_u, b_c, c_c, c_i, q.
double* param_by_name(GameParams& p, std::string_view name);
const double* param_by_name(const GameParams& p, std::string_view name);
inline constexpr std::array<std::string_view, 6> kParamNames = {"b_u", "c_u", "b_c",
                                                                "c_c", "c_i", "q"};

}  // namespace mediagov
