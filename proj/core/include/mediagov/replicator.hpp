#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mediagov/params.hpp"
#include "mediagov/payoff.hpp"

namespace mediagov {

/// Right-hand-side variant of the selection dynamics.
///
/// PaperExact (default):
///   dx_i/dt = x_i (1 - x_i) [ pi_i - pibar_user ]      i = 1..3
///   dy/dt   = y (1 - y) [ pi_C - pibar_creator ]
/// with x4 = 1 - x1 - x2 - x3 substituted. This form does not structurally
/// conserve the simplex faces (x4 can be pushed below 0), hence the
/// post-step projection in the integrator, and it linearises degenerately
/// at corners (see equilibria.hpp).
///
/// Textbook: the standard multi-strategy replicator
///   dx_i/dt = x_i [ pi_i - pibar_user ],  dy/dt = y (1 - y) (pi_C - pi_D),
/// kept selectable for comparison studies.
enum class DynamicsForm { PaperExact, Textbook };

/// Time derivatives (dx1, dx2, dx3, dy) at state s.
std::array<double, 4> derivatives(const PopulationState& s, const GameParams& p,
                                  DynamicsForm form = DynamicsForm::PaperExact);

struct IntegratorConfig {
  double step_size = 0.01;        // RK4 step; must be in (0, 0.1]
  double horizon = 10000.0;       // total integration time; >= 100 * step_size
  int record_stride = 10;         // record every N-th step
  double simplex_tolerance = 1e-9;
  double convergence_epsilon = 1e-6;  // derivative max-norm threshold
  double corner_epsilon = 1e-3;       // state max-norm radius for corner convergence
  DynamicsForm form = DynamicsForm::PaperExact;
  bool project = true;  // clip to [0,1], renormalise x, after every step
};

/// Throws std::invalid_argument if the config violates its invariants.
void validate_config(const IntegratorConfig& cfg);

struct Trajectory {
  std::vector<double> times;            // strictly increasing, starts at 0
  std::vector<PopulationState> states;  // same length as times
  std::vector<double> eta_series;       // avg_cooperation at each recorded state
  double max_projection_drift = 0.0;    // max per-step |projected - raw|, max-norm
};

/// Fixed-step RK4 trajectory from s0. After each step the x components and
/// the derived x4 are clipped to [0,1] and renormalised to sum 1, and y is
/// clipped to [0,1]; components below 1e-300 are snapped to 0 (they would
/// otherwise decay into denormals, which cost an order of magnitude in
/// throughput without affecting any observable). Throws std::runtime_error
/// naming the step index if the state turns non-finite.
Trajectory integrate(const PopulationState& s0, const GameParams& p,
                     const IntegratorConfig& cfg);

enum class OutcomeKind { ConvergedDefection, ConvergedOther, Oscillating };

std::string_view to_string(OutcomeKind k);

struct TrajectoryOutcome {
  OutcomeKind kind = OutcomeKind::Oscillating;
  double time_averaged_eta = 0.0;  // trapezoidal mean of eta over the final half-horizon
  PopulationState terminal;
};

/// Classifies a recorded trajectory:
///   ConvergedDefection  terminal state within corner_epsilon (max-norm) of
///                       the full-defection corner (x1=1, y=0);
///   ConvergedOther      derivative max-norm at the terminal state below
///                       convergence_epsilon, but not the defection corner;
///   Oscillating         otherwise.
/// Throws std::invalid_argument on a trajectory with fewer than 2 points.
TrajectoryOutcome classify_outcome(const Trajectory& t, const GameParams& p,
                                   const IntegratorConfig& cfg);

/// Single-state fast path: integrates without recording and returns the
/// outcome directly. Identical stepping to integrate(); used by the census
/// and sweep grids. If early_exit is set, integration stops once the state
/// is within corner_epsilon of a corner that is a stable hyperbolic
/// equilibrium for p (precomputed), continuing eta as the corner value.
TrajectoryOutcome integrate_outcome(const PopulationState& s0, const GameParams& p,
                                    const IntegratorConfig& cfg, bool early_exit = true);

struct BasinStateResult {
  std::int64_t state_id = 0;
  PopulationState start;
  OutcomeKind outcome = OutcomeKind::Oscillating;
  double eta_avg = 0.0;
};

struct BasinCensus {
  std::int64_t total_states = 0;
  double defection_fraction = 0.0;  // fraction classified ConvergedDefection
  double mean_eta = 0.0;            // mean time-averaged eta over all starts
  double grid_step = 0.02;
  std::int64_t failures = 0;  // non-finite integrations, excluded from the stats
};

/// Enumerates every starting state with user frequencies on the simplex
/// grid { (k1,k2,k3,k4)/K : k_i >= 0, sum k_i = K } for K = 1/grid_step,
/// crossed with y in {0, grid_step, ..., 1}, integrates each and aggregates.
/// grid_step must divide 1 exactly. rows, when non-null, receives one entry
/// per starting state in enumeration order regardless of worker count.
BasinCensus basin_census(const GameParams& p, double grid_step, const IntegratorConfig& cfg,
                         int jobs = 0, std::vector<BasinStateResult>* rows = nullptr);

/// Number of starting states basin_census will enumerate for a grid step.
std::int64_t basin_state_count(double grid_step);

/// Time-averaged eta for each parameter set, integrated from s0 (default:
/// uniform users, y = 0.5). Cells that fail to integrate yield NaN.
std::vector<double> time_averaged_eta_grid(std::span<const GameParams> grid,
                                           const PopulationState& s0, const IntegratorConfig& cfg,
                                           int jobs = 0);

/// Convenience single-cell version of time_averaged_eta_grid.
double time_averaged_eta(const GameParams& p, const PopulationState& s0,
                         const IntegratorConfig& cfg);

}  // namespace mediagov
