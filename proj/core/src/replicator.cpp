#include "mediagov/replicator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mediagov/parallel.hpp"

namespace mediagov {

namespace {

// Frequencies below this are snapped to exact 0 by the projection. They sit
// far above the denormal range (so decaying strategies cannot drag every
// arithmetic op into denormal handling) and far below anything that can
// regrow before underflowing anyway.
constexpr double kZeroSnap = 1e-300;

// Raw RHS on v = (x1, x2, x3, y) with x4 = 1 - x1 - x2 - x3.
inline void rhs(const double v[4], const GameParams& p, DynamicsForm form, double out[4]) {
  const double x1 = v[0], x2 = v[1], x3 = v[2], y = v[3];
  const double x4 = 1.0 - x1 - x2 - x3;

  const double pi1 = 0.0;
  const double pi2 = 0.5 * p.b_u * y - 0.5 * p.c_u * (1.0 - y);
  const double pi3 = (p.q * p.b_u - p.c_i) * y - ((1.0 - p.q) * p.c_u + p.c_i) * (1.0 - y);
  const double pi4 = p.b_u * y - p.c_u * (1.0 - y);
  const double bar_user = x1 * pi1 + x2 * pi2 + x3 * pi3 + x4 * pi4;

  const double pi_c = (-p.c_c) * x1 + (0.5 * p.b_c - p.c_c) * x2 + (p.q * p.b_c - p.c_c) * x3 +
                      (p.b_c - p.c_c) * x4;
  const double pi_d = 0.5 * p.b_c * x2 + (1.0 - p.q) * p.b_c * x3 + p.b_c * x4;

  if (form == DynamicsForm::PaperExact) {
    out[0] = x1 * (1.0 - x1) * (pi1 - bar_user);
    out[1] = x2 * (1.0 - x2) * (pi2 - bar_user);
    out[2] = x3 * (1.0 - x3) * (pi3 - bar_user);
    const double bar_creator = y * pi_c + (1.0 - y) * pi_d;
    out[3] = y * (1.0 - y) * (pi_c - bar_creator);
  } else {
    out[0] = x1 * (pi1 - bar_user);
    out[1] = x2 * (pi2 - bar_user);
    out[2] = x3 * (pi3 - bar_user);
    out[3] = y * (1.0 - y) * (pi_c - pi_d);
  }
}

inline void rk4_step(double v[4], const GameParams& p, DynamicsForm form, double h) {
  double k1[4], k2[4], k3[4], k4[4], tmp[4];
  rhs(v, p, form, k1);
  for (int i = 0; i < 4; ++i) tmp[i] = v[i] + 0.5 * h * k1[i];
  rhs(tmp, p, form, k2);
  for (int i = 0; i < 4; ++i) tmp[i] = v[i] + 0.5 * h * k2[i];
  rhs(tmp, p, form, k3);
  for (int i = 0; i < 4; ++i) tmp[i] = v[i] + h * k3[i];
  rhs(tmp, p, form, k4);
  for (int i = 0; i < 4; ++i) {
    v[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
}

// Clip-and-renormalise; returns the max-norm change applied (including the
// derived x4 component).
inline double project(double v[4]) {
  const double raw_x4 = 1.0 - v[0] - v[1] - v[2];
  double c[4] = {std::clamp(v[0], 0.0, 1.0), std::clamp(v[1], 0.0, 1.0),
                 std::clamp(v[2], 0.0, 1.0), std::clamp(raw_x4, 0.0, 1.0)};
  for (double& ci : c) {
    if (ci < kZeroSnap) ci = 0.0;
  }
  const double sum = c[0] + c[1] + c[2] + c[3];
  for (double& ci : c) ci /= sum;
  double yy = std::clamp(v[3], 0.0, 1.0);
  if (yy < kZeroSnap) yy = 0.0;
  double drift = std::fabs(c[3] - raw_x4);
  drift = std::max(drift, std::fabs(c[0] - v[0]));
  drift = std::max(drift, std::fabs(c[1] - v[1]));
  drift = std::max(drift, std::fabs(c[2] - v[2]));
  drift = std::max(drift, std::fabs(yy - v[3]));
  v[0] = c[0];
  v[1] = c[1];
  v[2] = c[2];
  v[3] = yy;
  return drift;
}

inline PopulationState to_state(const double v[4]) {
  PopulationState s;
  // the derived component can round to -1e-17 after renormalisation
  s.x = {v[0], v[1], v[2], std::clamp(1.0 - v[0] - v[1] - v[2], 0.0, 1.0)};
  s.y = v[3];
  return s;
}

inline double eta_at(const double v[4], const GameParams& p) {
  const double x4 = 1.0 - v[0] - v[1] - v[2];
  const double gmedia_coop = p.q * v[3] + (1.0 - p.q) * (1.0 - v[3]);
  return (v[3] + 0.5 * v[1] + gmedia_coop * v[2] + x4) * 0.5;
}

inline bool finite4(const double v[4]) {
  return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]) &&
         std::isfinite(v[3]);
}

// Max-norm distance over (x1..x4, y) between v and a corner.
inline double corner_distance(const double v[4], const PopulationState& corner) {
  const double x4 = 1.0 - v[0] - v[1] - v[2];
  double d = std::fabs(v[0] - corner.x[0]);
  d = std::max(d, std::fabs(v[1] - corner.x[1]));
  d = std::max(d, std::fabs(v[2] - corner.x[2]));
  d = std::max(d, std::fabs(x4 - corner.x[3]));
  return std::max(d, std::fabs(v[3] - corner.y));
}

struct AttractingCorner {
  PopulationState state;
  double eta;
  bool is_defection;
};

// Corners that are stable equilibria of the textbook dynamics with a
// margin (the corner spectrum is the invasion payoff differences; the
// exact form only turns the dominant-coordinate directions into attracting
// centre directions, so a textbook-stable corner attracts under both
// forms). Used to stop census integrations early: the margin, together
// with the capped exit radius in integrate_outcome, keeps the exit ball
// well inside the corner's basin, so a trajectory that enters it cannot
// leave.
std::vector<AttractingCorner> attracting_corners(const GameParams& p) {
  constexpr double tol = 2e-2;
  std::vector<AttractingCorner> out;
  for (UserStrategy u : kAllUserStrategies) {
    for (CreatorStrategy c : kAllCreatorStrategies) {
      const PopulationState corner = corner_state(u, c);
      const auto user_pi = expected_user_payoffs(corner, p);
      const auto creator_pi = expected_creator_payoffs(corner, p);
      const int k = static_cast<int>(u);
      double max_eig = -1e300;
      for (int i = 0; i < 4; ++i) {
        if (i == k) continue;
        max_eig = std::max(max_eig, user_pi[i] - user_pi[k]);
      }
      const double creator_gap = creator_pi[1] - creator_pi[0];  // pi_C - pi_D
      max_eig = std::max(max_eig, corner.y == 0.0 ? creator_gap : -creator_gap);
      if (max_eig < -tol) {
        out.push_back({corner, avg_cooperation(corner, p),
                       u == UserStrategy::AllD && c == CreatorStrategy::Unsafe});
      }
    }
  }
  return out;
}

}  // namespace

std::array<double, 4> derivatives(const PopulationState& s, const GameParams& p,
                                  DynamicsForm form) {
  const double v[4] = {s.x[0], s.x[1], s.x[2], s.y};
  std::array<double, 4> out;
  rhs(v, p, form, out.data());
  return out;
}

void validate_config(const IntegratorConfig& cfg) {
  if (!(cfg.step_size > 0.0) || cfg.step_size > 0.1) {
    throw std::invalid_argument("step_size must lie in (0, 0.1]");
  }
  if (!(cfg.horizon >= 100.0 * cfg.step_size)) {
    throw std::invalid_argument("horizon must be >= 100 * step_size");
  }
  if (cfg.record_stride < 1) throw std::invalid_argument("record_stride must be >= 1");
}

Trajectory integrate(const PopulationState& s0, const GameParams& p,
                     const IntegratorConfig& cfg) {
  validate_config(cfg);
  const auto steps = static_cast<std::int64_t>(std::llround(cfg.horizon / cfg.step_size));
  double v[4] = {s0.x[0], s0.x[1], s0.x[2], s0.y};

  Trajectory t;
  const auto expected = static_cast<std::size_t>(steps / cfg.record_stride + 2);
  t.times.reserve(expected);
  t.states.reserve(expected);
  t.eta_series.reserve(expected);

  const auto record = [&](std::int64_t step) {
    t.times.push_back(static_cast<double>(step) * cfg.step_size);
    t.states.push_back(to_state(v));
    t.eta_series.push_back(eta_at(v, p));
  };
  record(0);
  for (std::int64_t n = 1; n <= steps; ++n) {
    rk4_step(v, p, cfg.form, cfg.step_size);
    if (cfg.project) {
      t.max_projection_drift = std::max(t.max_projection_drift, project(v));
    }
    if (!finite4(v)) {
      throw std::runtime_error("integrate: non-finite state at step " + std::to_string(n));
    }
    if (n % cfg.record_stride == 0 || n == steps) record(n);
  }
  return t;
}

std::string_view to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::ConvergedDefection: return "converged_defection";
    case OutcomeKind::ConvergedOther: return "converged_other";
    case OutcomeKind::Oscillating: return "oscillating";
  }
  return "?";
}

namespace {

OutcomeKind classify_terminal(const double v[4], const GameParams& p,
                              const IntegratorConfig& cfg) {
  const PopulationState defection =
      corner_state(UserStrategy::AllD, CreatorStrategy::Unsafe);
  if (corner_distance(v, defection) < cfg.corner_epsilon) {
    return OutcomeKind::ConvergedDefection;
  }
  double d[4];
  rhs(v, p, cfg.form, d);
  const double dnorm =
      std::max(std::max(std::fabs(d[0]), std::fabs(d[1])), std::max(std::fabs(d[2]), std::fabs(d[3])));
  return dnorm < cfg.convergence_epsilon ? OutcomeKind::ConvergedOther : OutcomeKind::Oscillating;
}

}  // namespace

TrajectoryOutcome classify_outcome(const Trajectory& t, const GameParams& p,
                                   const IntegratorConfig& cfg) {
  if (t.times.size() < 2) {
    throw std::invalid_argument("classify_outcome: trajectory has fewer than 2 points");
  }
  const double t_end = t.times.back();
  const double t_half = 0.5 * t_end;

  // trapezoidal mean of eta over recorded samples with time >= t_half
  std::size_t first = 0;
  while (first + 1 < t.times.size() && t.times[first] < t_half) ++first;
  if (first == t.times.size() - 1) --first;
  double area = 0.0;
  for (std::size_t i = first + 1; i < t.times.size(); ++i) {
    area += 0.5 * (t.eta_series[i] + t.eta_series[i - 1]) * (t.times[i] - t.times[i - 1]);
  }
  const double span = t.times.back() - t.times[first];

  TrajectoryOutcome out;
  out.terminal = t.states.back();
  out.time_averaged_eta = span > 0.0 ? area / span : t.eta_series.back();
  const double v[4] = {out.terminal.x[0], out.terminal.x[1], out.terminal.x[2], out.terminal.y};
  out.kind = classify_terminal(v, p, cfg);
  return out;
}

TrajectoryOutcome integrate_outcome(const PopulationState& s0, const GameParams& p,
                                    const IntegratorConfig& cfg, bool early_exit) {
  validate_config(cfg);
  const auto steps = static_cast<std::int64_t>(std::llround(cfg.horizon / cfg.step_size));
  const std::int64_t half_start = steps / 2;
  const double half_span = static_cast<double>(steps - half_start) * cfg.step_size;

  std::vector<AttractingCorner> corners;
  if (early_exit && cfg.project) corners = attracting_corners(p);
  const double exit_radius = std::min(cfg.corner_epsilon, 1e-3);

  double v[4] = {s0.x[0], s0.x[1], s0.x[2], s0.y};
  double eta_prev = eta_at(v, p);
  double area = 0.0;

  TrajectoryOutcome out;
  for (std::int64_t n = 0; n < steps; ++n) {
    rk4_step(v, p, cfg.form, cfg.step_size);
    if (cfg.project) project(v);
    if (!finite4(v)) {
      throw std::runtime_error("integrate_outcome: non-finite state at step " +
                               std::to_string(n + 1));
    }
    const double e = eta_at(v, p);
    if (n >= half_start) area += 0.5 * (e + eta_prev) * cfg.step_size;
    eta_prev = e;

    for (const AttractingCorner& c : corners) {
      if (corner_distance(v, c.state) < exit_radius) {
        const double t_now = static_cast<double>(n + 1) * cfg.step_size;
        const double t_half = static_cast<double>(half_start) * cfg.step_size;
        const double covered = std::max(0.0, t_now - t_half);
        out.time_averaged_eta = (n >= half_start ? area : 0.0) / half_span +
                                c.eta * (half_span - covered) / half_span;
        out.terminal = to_state(v);
        out.kind = c.is_defection ? OutcomeKind::ConvergedDefection : OutcomeKind::ConvergedOther;
        return out;
      }
    }
  }
  out.terminal = to_state(v);
  out.time_averaged_eta = area / half_span;
  out.kind = classify_terminal(v, p, cfg);
  return out;
}

std::int64_t basin_state_count(double grid_step) {
  const auto k = static_cast<std::int64_t>(std::llround(1.0 / grid_step));
  if (k < 1 || std::fabs(static_cast<double>(k) * grid_step - 1.0) > 1e-9) {
    throw std::invalid_argument("grid_step must divide 1 exactly");
  }
  return (k + 1) * (k + 2) * (k + 3) / 6 * (k + 1);  // C(k+3,3) compositions times k+1 y values
}

BasinCensus basin_census(const GameParams& p, double grid_step, const IntegratorConfig& cfg,
                         int jobs, std::vector<BasinStateResult>* rows) {
  validate_params(p);
  validate_config(cfg);
  const std::int64_t total = basin_state_count(grid_step);
  const auto k = static_cast<std::int64_t>(std::llround(1.0 / grid_step));

  struct Comp {
    int k1, k2, k3;
  };
  std::vector<Comp> comps;
  comps.reserve(static_cast<std::size_t>(total / (k + 1)));
  for (int k1 = 0; k1 <= k; ++k1) {
    for (int k2 = 0; k1 + k2 <= k; ++k2) {
      for (int k3 = 0; k1 + k2 + k3 <= k; ++k3) comps.push_back({k1, k2, k3});
    }
  }

  std::vector<std::uint8_t> defect(static_cast<std::size_t>(total), 0);
  std::vector<std::uint8_t> failed(static_cast<std::size_t>(total), 0);
  std::vector<double> etas(static_cast<std::size_t>(total), 0.0);
  if (rows) rows->resize(static_cast<std::size_t>(total));

  const double kd = static_cast<double>(k);
  parallel_for_index(total, jobs, [&](std::int64_t idx) {
    const auto comp = comps[static_cast<std::size_t>(idx / (k + 1))];
    const auto ky = static_cast<int>(idx % (k + 1));
    PopulationState s0;
    s0.x = {comp.k1 / kd, comp.k2 / kd, comp.k3 / kd,
            static_cast<double>(k - comp.k1 - comp.k2 - comp.k3) / kd};
    s0.y = ky / kd;
    BasinStateResult r;
    r.state_id = idx;
    r.start = s0;
    try {
      const TrajectoryOutcome o = integrate_outcome(s0, p, cfg, /*early_exit=*/true);
      r.outcome = o.kind;
      r.eta_avg = o.time_averaged_eta;
      defect[static_cast<std::size_t>(idx)] = o.kind == OutcomeKind::ConvergedDefection ? 1 : 0;
      etas[static_cast<std::size_t>(idx)] = o.time_averaged_eta;
    } catch (const std::exception&) {
      failed[static_cast<std::size_t>(idx)] = 1;
      r.eta_avg = std::numeric_limits<double>::quiet_NaN();
    }
    if (rows) (*rows)[static_cast<std::size_t>(idx)] = r;
  });

  BasinCensus census;
  census.total_states = total;
  census.grid_step = grid_step;
  std::int64_t n_defect = 0, n_failed = 0;
  double eta_sum = 0.0;
  for (std::int64_t i = 0; i < total; ++i) {
    if (failed[static_cast<std::size_t>(i)]) {
      ++n_failed;
      continue;
    }
    n_defect += defect[static_cast<std::size_t>(i)];
    eta_sum += etas[static_cast<std::size_t>(i)];
  }
  census.failures = n_failed;
  const std::int64_t counted = total - n_failed;
  census.defection_fraction = counted > 0 ? static_cast<double>(n_defect) / counted : 0.0;
  census.mean_eta = counted > 0 ? eta_sum / counted : 0.0;
  return census;
}

std::vector<double> time_averaged_eta_grid(std::span<const GameParams> grid,
                                           const PopulationState& s0, const IntegratorConfig& cfg,
                                           int jobs) {
  std::vector<double> out(grid.size(), std::numeric_limits<double>::quiet_NaN());
  parallel_for_index(static_cast<std::int64_t>(grid.size()), jobs, [&](std::int64_t i) {
    try {
      const GameParams p = validate_params(grid[static_cast<std::size_t>(i)]);
      out[static_cast<std::size_t>(i)] =
          integrate_outcome(s0, p, cfg, /*early_exit=*/true).time_averaged_eta;
    } catch (const std::exception&) {
      // leave NaN
    }
  });
  return out;
}

double time_averaged_eta(const GameParams& p, const PopulationState& s0,
                         const IntegratorConfig& cfg) {
  return integrate_outcome(s0, validate_params(p), cfg, /*early_exit=*/true).time_averaged_eta;
}

}  // namespace mediagov
