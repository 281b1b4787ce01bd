#include "mediagov/payoff.hpp"

#include <cmath>
#include <stdexcept>

namespace mediagov {

bool is_valid_state(const PopulationState& s, double tol) {
  double sum = 0.0;
  for (double xi : s.x) {
    if (!(xi >= 0.0 && xi <= 1.0)) return false;
    sum += xi;
  }
  if (std::fabs(sum - 1.0) > tol) return false;
  return s.y >= 0.0 && s.y <= 1.0;
}

PopulationState corner_state(UserStrategy u, CreatorStrategy c) {
  PopulationState s;
  s.x = {0.0, 0.0, 0.0, 0.0};
  s.x[static_cast<int>(u)] = 1.0;
  s.y = (c == CreatorStrategy::Safe) ? 1.0 : 0.0;
  return s;
}

PayoffPair payoff_pair(CreatorStrategy creator, UserStrategy user, const GameParams& p) {
  if (creator == CreatorStrategy::Unsafe) {
    switch (user) {
      case UserStrategy::AllD: return {0.0, 0.0};
      case UserStrategy::BMedia: return {-0.5 * p.c_u, 0.5 * p.b_c};
      case UserStrategy::GMedia: return {-(1.0 - p.q) * p.c_u - p.c_i, (1.0 - p.q) * p.b_c};
      case UserStrategy::AllC: return {-p.c_u, p.b_c};
    }
  } else {
    switch (user) {
      case UserStrategy::AllD: return {0.0, -p.c_c};
      case UserStrategy::BMedia: return {0.5 * p.b_u, 0.5 * p.b_c - p.c_c};
      case UserStrategy::GMedia: return {p.q * p.b_u - p.c_i, p.q * p.b_c - p.c_c};
      case UserStrategy::AllC: return {p.b_u, p.b_c - p.c_c};
    }
  }
  return {};
}

PayoffTable make_payoff_table(const GameParams& p) {
  PayoffTable t{};
  for (CreatorStrategy c : kAllCreatorStrategies) {
    for (UserStrategy u : kAllUserStrategies) {
      const PayoffPair pp = payoff_pair(c, u, p);
      t.user[static_cast<int>(c)][static_cast<int>(u)] = pp.user;
      t.creator[static_cast<int>(c)][static_cast<int>(u)] = pp.creator;
    }
  }
  return t;
}

std::array<double, 4> expected_user_payoffs(const PopulationState& s, const GameParams& p) {
  const double y = s.y;
  return {
      0.0,
      0.5 * p.b_u * y - 0.5 * p.c_u * (1.0 - y),
      (p.q * p.b_u - p.c_i) * y - ((1.0 - p.q) * p.c_u + p.c_i) * (1.0 - y),
      p.b_u * y - p.c_u * (1.0 - y),
  };
}

std::array<double, 2> expected_creator_payoffs(const PopulationState& s, const GameParams& p) {
  const auto& x = s.x;
  const double pi_d = 0.5 * p.b_c * x[1] + (1.0 - p.q) * p.b_c * x[2] + p.b_c * x[3];
  const double pi_c = (-p.c_c) * x[0] + (0.5 * p.b_c - p.c_c) * x[1] +
                      (p.q * p.b_c - p.c_c) * x[2] + (p.b_c - p.c_c) * x[3];
  return {pi_d, pi_c};
}

double avg_cooperation(const PopulationState& s, const GameParams& p) {
  const double gmedia_coop = p.q * s.y + (1.0 - p.q) * (1.0 - s.y);
  return (s.y + 0.5 * s.x[1] + gmedia_coop * s.x[2] + s.x[3]) * 0.5;
}

double empirical_cooperation(std::span<const UserStrategy> users,
                             std::span<const CreatorStrategy> creators, const GameParams& p) {
  if (users.empty() || creators.empty()) {
    throw std::invalid_argument("empirical_cooperation: empty population");
  }
  PopulationState s;
  s.x = {0.0, 0.0, 0.0, 0.0};
  for (UserStrategy u : users) s.x[static_cast<int>(u)] += 1.0;
  for (double& xi : s.x) xi /= static_cast<double>(users.size());
  double safe = 0.0;
  for (CreatorStrategy c : creators) safe += (c == CreatorStrategy::Safe) ? 1.0 : 0.0;
  s.y = safe / static_cast<double>(creators.size());
  return avg_cooperation(s, p);
}

}  // namespace mediagov
