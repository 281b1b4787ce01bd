#include "mediagov/abm.hpp"

#include <cmath>
#include <stdexcept>

#include "mediagov/parallel.hpp"

namespace mediagov {

AbmConfig validate_abm_config(const AbmConfig& cfg) {
  const auto bad = [](const char* what) { throw std::invalid_argument(what); };
  if (cfg.n_users < 1) bad("n_users must be >= 1");
  if (cfg.n_creators < 1) bad("n_creators must be >= 1");
  if (!(cfg.beta_u >= 0.0) || !std::isfinite(cfg.beta_u)) bad("beta_u must be >= 0 and finite");
  if (!(cfg.beta_c >= 0.0) || !std::isfinite(cfg.beta_c)) bad("beta_c must be >= 0 and finite");
  if (!(cfg.mu_u >= 0.0 && cfg.mu_u <= 1.0)) bad("mu_u must lie in [0, 1]");
  if (!(cfg.mu_c >= 0.0 && cfg.mu_c <= 1.0)) bad("mu_c must lie in [0, 1]");
  if (cfg.generations < 1) bad("generations must be >= 1");
  if (!(cfg.burn_in_fraction >= 0.0 && cfg.burn_in_fraction < 1.0)) {
    bad("burn_in_fraction must lie in [0, 1)");
  }
  if (cfg.replicates < 1) bad("replicates must be >= 1");
  return cfg;
}

AgentPopulations random_populations(int n_users, int n_creators, Rng& rng) {
  AgentPopulations pop;
  pop.users.resize(static_cast<std::size_t>(n_users));
  pop.creators.resize(static_cast<std::size_t>(n_creators));
  for (auto& u : pop.users) u = static_cast<UserStrategy>(rng.uniform_below(4));
  for (auto& c : pop.creators) c = static_cast<CreatorStrategy>(rng.uniform_below(2));
  return pop;
}

AgentPopulations homogeneous_populations(int n_users, int n_creators, UserStrategy u,
                                         CreatorStrategy c) {
  AgentPopulations pop;
  pop.users.assign(static_cast<std::size_t>(n_users), u);
  pop.creators.assign(static_cast<std::size_t>(n_creators), c);
  return pop;
}

double fermi_probability(double pi_i, double pi_j, double beta) {
  // p_{i->j} = 1 / (1 + exp(-beta (pi_j - pi_i)))
  const double x = beta * (pi_j - pi_i);
  if (x >= 0.0) {
    const double t = std::exp(-x);
    return 1.0 / (1.0 + t);
  }
  const double t = std::exp(x);
  return t / (1.0 + t);
}

double accumulate_payoff(UserStrategy strat, std::span<const CreatorStrategy> creators,
                         const PayoffTable& table, Rng& rng) {
  if (creators.empty()) throw std::invalid_argument("accumulate_payoff: empty population");
  const std::uint64_t m = creators.size();
  const int u = static_cast<int>(strat);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < m; ++i) {
    sum += table.user[static_cast<int>(creators[rng.uniform_below(m)])][u];
  }
  return sum / static_cast<double>(m);
}

double accumulate_payoff(CreatorStrategy strat, std::span<const UserStrategy> users,
                         const PayoffTable& table, Rng& rng) {
  if (users.empty()) throw std::invalid_argument("accumulate_payoff: empty population");
  const std::uint64_t m = users.size();
  const int c = static_cast<int>(strat);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < m; ++i) {
    sum += table.creator[c][static_cast<int>(users[rng.uniform_below(m)])];
  }
  return sum / static_cast<double>(m);
}

namespace {

void update_user(AgentPopulations& pop, const PayoffTable& table, const AbmConfig& cfg,
                 Rng& rng) {
  const std::uint64_t n = pop.users.size();
  const auto focal = static_cast<std::size_t>(rng.uniform_below(n));
  if (rng.uniform01() < cfg.mu_u) {
    const auto shift = 1 + rng.uniform_below(3);
    pop.users[focal] = static_cast<UserStrategy>(
        (static_cast<std::uint64_t>(pop.users[focal]) + shift) % 4);
    return;
  }
  if (n < 2) return;  // no distinct model to imitate
  auto model = static_cast<std::size_t>(rng.uniform_below(n - 1));
  if (model >= focal) ++model;
  const double pi_focal = accumulate_payoff(pop.users[focal], pop.creators, table, rng);
  const double pi_model = accumulate_payoff(pop.users[model], pop.creators, table, rng);
  if (rng.uniform01() < fermi_probability(pi_focal, pi_model, cfg.beta_u)) {
    pop.users[focal] = pop.users[model];
  }
}

void update_creator(AgentPopulations& pop, const PayoffTable& table, const AbmConfig& cfg,
                    Rng& rng) {
  const std::uint64_t n = pop.creators.size();
  const auto focal = static_cast<std::size_t>(rng.uniform_below(n));
  if (rng.uniform01() < cfg.mu_c) {
    pop.creators[focal] = pop.creators[focal] == CreatorStrategy::Safe ? CreatorStrategy::Unsafe
                                                                       : CreatorStrategy::Safe;
    return;
  }
  if (n < 2) return;  // no distinct model to imitate
  auto model = static_cast<std::size_t>(rng.uniform_below(n - 1));
  if (model >= focal) ++model;
  const double pi_focal = accumulate_payoff(pop.creators[focal], pop.users, table, rng);
  const double pi_model = accumulate_payoff(pop.creators[model], pop.users, table, rng);
  if (rng.uniform01() < fermi_probability(pi_focal, pi_model, cfg.beta_c)) {
    pop.creators[focal] = pop.creators[model];
  }
}

}  // namespace

void evolutionary_step(AgentPopulations& pop, const PayoffTable& table, const AbmConfig& cfg,
                       Rng& rng) {
  if (cfg.paired_updates) {
    update_user(pop, table, cfg, rng);
    update_creator(pop, table, cfg, rng);
  } else {
    const std::uint64_t total = pop.users.size() + pop.creators.size();
    if (rng.uniform_below(total) < pop.users.size()) {
      update_user(pop, table, cfg, rng);
    } else {
      update_creator(pop, table, cfg, rng);
    }
  }
}

AbmTimeSeries run_abm(const GameParams& p, const AbmConfig& cfg,
                      const std::optional<AgentPopulations>& initial) {
  validate_params(p);
  validate_abm_config(cfg);
  Rng rng(cfg.seed);
  AgentPopulations pop =
      initial ? *initial : random_populations(cfg.n_users, cfg.n_creators, rng);
  if (static_cast<int>(pop.users.size()) != cfg.n_users ||
      static_cast<int>(pop.creators.size()) != cfg.n_creators) {
    throw std::invalid_argument("run_abm: initial populations do not match configured sizes");
  }
  const PayoffTable table = make_payoff_table(p);

  AbmTimeSeries ts;
  ts.user_counts.reserve(static_cast<std::size_t>(cfg.generations) + 1);
  ts.creator_counts.reserve(static_cast<std::size_t>(cfg.generations) + 1);
  ts.eta.reserve(static_cast<std::size_t>(cfg.generations) + 1);
  const auto record = [&] {
    std::array<int, 4> uc{};
    for (UserStrategy u : pop.users) ++uc[static_cast<int>(u)];
    std::array<int, 2> cc{};
    for (CreatorStrategy c : pop.creators) ++cc[static_cast<int>(c)];
    ts.user_counts.push_back(uc);
    ts.creator_counts.push_back(cc);
    ts.eta.push_back(empirical_cooperation(pop.users, pop.creators, p));
  };
  record();

  const int steps_per_generation = cfg.n_users + cfg.n_creators;
  for (int g = 1; g <= cfg.generations; ++g) {
    for (int s = 0; s < steps_per_generation; ++s) evolutionary_step(pop, table, cfg, rng);
    record();
  }
  return ts;
}

double mean_eta_after_burn_in(const AbmTimeSeries& ts, const AbmConfig& cfg) {
  const int g_max = static_cast<int>(ts.eta.size()) - 1;
  const int burn = static_cast<int>(std::floor(cfg.burn_in_fraction * g_max + 1e-12));
  double sum = 0.0;
  int count = 0;
  for (int g = burn + 1; g <= g_max; ++g) {
    sum += ts.eta[static_cast<std::size_t>(g)];
    ++count;
  }
  if (count == 0) throw std::invalid_argument("mean_eta_after_burn_in: no generations left");
  return sum / count;
}

AbmAverage average_cooperation_abm(const GameParams& p, const AbmConfig& cfg, int jobs,
                                   const std::optional<AgentPopulations>& initial) {
  validate_params(p);
  validate_abm_config(cfg);
  AbmAverage out;
  out.per_replicate.resize(static_cast<std::size_t>(cfg.replicates));
  parallel_for_index(cfg.replicates, jobs, [&](std::int64_t r) {
    AbmConfig rep_cfg = cfg;
    rep_cfg.seed = cfg.seed + static_cast<std::uint64_t>(r);
    const AbmTimeSeries ts = run_abm(p, rep_cfg, initial);
    out.per_replicate[static_cast<std::size_t>(r)] = mean_eta_after_burn_in(ts, rep_cfg);
  });
  double sum = 0.0;
  for (double v : out.per_replicate) sum += v;
  out.mean = sum / static_cast<double>(cfg.replicates);
  double var = 0.0;
  for (double v : out.per_replicate) var += (v - out.mean) * (v - out.mean);
  out.stddev = std::sqrt(var / static_cast<double>(cfg.replicates));
  return out;
}

}  // namespace mediagov
