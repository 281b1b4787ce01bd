#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mediagov/params.hpp"
#include "mediagov/payoff.hpp"
#include "mediagov/rng.hpp"

namespace mediagov {

/// Finite-population Monte Carlo configuration.
///
/// Defaults follow the baseline experiment profile: N_U=100, N_C=50,
/// beta_U=beta_C=1, mu_u=1/N_U, mu_c=1/N_C, burn-in G/10, R=100.
struct AbmConfig {
  int n_users = 100;
  int n_creators = 50;
  double beta_u = 1.0;  // user selection strength (>= 0)
  double beta_c = 1.0;  // creator selection strength (>= 0)
  double mu_u = 0.01;   // user mutation probability
  double mu_c = 0.02;   // creator mutation probability
  int generations = 500;
  double burn_in_fraction = 0.1;  // in [0, 1)
  std::uint64_t seed = 0;
  int replicates = 100;
  // One evolutionary step updates one user and then one creator. When
  // false, each step updates a single agent drawn uniformly from the union
  // of both populations instead. A generation is n_users + n_creators
  // steps either way.
  bool paired_updates = true;
};

/// Throws std::invalid_argument on invariant violations.
AbmConfig validate_abm_config(const AbmConfig& cfg);

struct AgentPopulations {
  std::vector<UserStrategy> users;
  std::vector<CreatorStrategy> creators;
};

AgentPopulations random_populations(int n_users, int n_creators, Rng& rng);
AgentPopulations homogeneous_populations(int n_users, int n_creators, UserStrategy u,
                                         CreatorStrategy c);

/// Per-generation record; index 0 is the initial state, indices 1..G the
/// state after each generation. Counts always sum to N_U / N_C.
struct AbmTimeSeries {
  std::vector<std::array<int, 4>> user_counts;
  std::vector<std::array<int, 2>> creator_counts;
  std::vector<double> eta;
};

/// Pairwise comparison rule p_{i->j} = 1 / (1 + exp(-beta (pi_j - pi_i))).
/// Numerically stable over the whole double range (saturates to 0/1).
double fermi_probability(double pi_i, double pi_j, double beta);

/// Average payoff of one agent against the opposing population: samples,
/// with replacement, exactly M opponents where M is the opposing population
/// size, sums the interaction payoffs and divides by M.
double accumulate_payoff(UserStrategy strat, std::span<const CreatorStrategy> creators,
                         const PayoffTable& table, Rng& rng);
double accumulate_payoff(CreatorStrategy strat, std::span<const UserStrategy> users,
                         const PayoffTable& table, Rng& rng);

/// One evolutionary step on pop, in place. Each updating agent mutates to a
/// uniformly drawn different strategy with probability mu; otherwise it
/// draws a distinct model from its own population, both average their
/// payoffs via accumulate_payoff (fresh samples), and the focal agent
/// imitates with fermi_probability.
void evolutionary_step(AgentPopulations& pop, const PayoffTable& table, const AbmConfig& cfg,
                       Rng& rng);

/// Runs cfg.generations generations of (n_users + n_creators) steps each
/// from the given initial populations (default: uniformly random, drawn
/// from the run's own RNG stream). Bit-reproducible for a fixed seed.
AbmTimeSeries run_abm(const GameParams& p, const AbmConfig& cfg,
                      const std::optional<AgentPopulations>& initial = std::nullopt);

/// Mean per-generation eta over generations in (G * burn_in_fraction, G].
double mean_eta_after_burn_in(const AbmTimeSeries& ts, const AbmConfig& cfg);

struct AbmAverage {
  double mean = 0.0;    // grand mean over replicates
  double stddev = 0.0;  // population std-dev over per-replicate means
  std::vector<double> per_replicate;
};

/// Average cooperation over cfg.replicates independently seeded runs
/// (replicate r uses seed cfg.seed + r); each replicate contributes its
/// post-burn-in mean eta. Replicates run in parallel across jobs workers;
/// aggregation is by replicate index, so the result is identical for any
/// worker count.
AbmAverage average_cooperation_abm(const GameParams& p, const AbmConfig& cfg, int jobs = 0,
                                   const std::optional<AgentPopulations>& initial = std::nullopt);

}  // namespace mediagov
