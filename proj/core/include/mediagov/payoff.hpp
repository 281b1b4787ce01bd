#pragma once

#include <array>
#include <span>

#include "mediagov/params.hpp"

namespace mediagov {

/// One interaction's (expected) payoffs for the user and the creator.
struct PayoffPair {
  double user = 0.0;
  double creator = 0.0;
};

/// Mixed state of the two infinite populations: user strategy frequencies
/// x = (x1 AllD, x2 BMedia, x3 GMedia, x4 AllC) on the simplex, and the
/// creator cooperator (Safe) frequency y.
struct PopulationState {
  std::array<double, 4> x = {0.25, 0.25, 0.25, 0.25};
  double y = 0.5;
};

/// Components in [0,1], sum(x) within tol of 1.
bool is_valid_state(const PopulationState& s, double tol = 1e-9);

/// Homogeneous corner state for a (user, creator) strategy pair.
PopulationState corner_state(UserStrategy u, CreatorStrategy c);

/// The interaction payoff matrix cell for (creator strategy, user strategy).
/// Media-following users act on probabilistic recommendations, so their
/// cells are expectations over the recommendation outcome:
///
///           AllD     BMedia                 GMedia                    AllC
///   Unsafe  (0,0)    (-c_u/2, b_c/2)        (-(1-q)c_u - c_i,         (-c_u, b_c)
///                                            (1-q) b_c)
///   Safe    (0,-c_c) (b_u/2, b_c/2 - c_c)   (q b_u - c_i, q b_c - c_c) (b_u, b_c - c_c)
PayoffPair payoff_pair(CreatorStrategy creator, UserStrategy user, const GameParams& p);

/// All eight cells at once, for hot loops. user[c][u] / creator[c][u] are
/// indexed by the frozen enum values.
struct PayoffTable {
  double user[2][4];
  double creator[2][4];
};
PayoffTable make_payoff_table(const GameParams& p);

/// Expected payoffs (pi_AllD, pi_BMedia, pi_GMedia, pi_AllC) of each user
/// strategy against a creator population with cooperator frequency s.y.
/// pi_AllD is identically 0.
std::array<double, 4> expected_user_payoffs(const PopulationState& s, const GameParams& p);

/// Expected payoffs (pi_D, pi_C) of each creator strategy against the user
/// mixture s.x. Index order matches CreatorStrategy (0 = Unsafe, 1 = Safe).
std::array<double, 2> expected_creator_payoffs(const PopulationState& s, const GameParams& p);

/// Average cooperation ratio
///   eta = [ y + 0.5 x2 + (q y + (1-q)(1-y)) x3 + x4 ] / 2,
/// combining creator cooperation and expected user cooperation; in [0,1].
double avg_cooperation(const PopulationState& s, const GameParams& p);

/// eta computed from explicit finite populations: derives the strategy
/// frequencies and applies the same expectation (media followers contribute
/// their cooperation probability, not a sampled coin flip). Throws
/// std::invalid_argument on an empty population.
double empirical_cooperation(std::span<const UserStrategy> users,
                             std::span<const CreatorStrategy> creators, const GameParams& p);

}  // namespace mediagov
