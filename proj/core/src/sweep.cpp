#include "mediagov/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mediagov/parallel.hpp"

namespace mediagov {

std::string_view to_string(EngineKind k) {
  return k == EngineKind::Replicator ? "replicator" : "abm";
}

namespace {

void validate_axis(const AxisSpec& a) {
  const bool known = std::find(kParamNames.begin(), kParamNames.end(), a.param) != kParamNames.end();
  if (!known) throw std::invalid_argument("unknown sweep parameter: " + a.param);
  if (a.steps < 2) throw std::invalid_argument("axis steps must be >= 2");
  if (!(a.min <= a.max)) throw std::invalid_argument("axis min must be <= max");
}

double axis_value(const AxisSpec& a, int i) {
  return a.min + (a.max - a.min) * static_cast<double>(i) / static_cast<double>(a.steps - 1);
}

}  // namespace

void validate_sweep_spec(const SweepSpec& spec) {
  validate_axis(spec.axis_x);
  validate_axis(spec.axis_y);
  if (spec.axis_x.param == spec.axis_y.param) {
    throw std::invalid_argument("axis_x and axis_y must name different parameters");
  }
  if (spec.engine == EngineKind::Replicator) validate_config(spec.integrator);
  else validate_abm_config(spec.abm);
}

SweepResult run_sweep(const SweepSpec& spec) {
  validate_sweep_spec(spec);
  SweepResult result;
  result.spec = spec;
  const int nx = spec.axis_x.steps, ny = spec.axis_y.steps;
  result.cells.resize(static_cast<std::size_t>(nx) * ny);

  parallel_for_index(static_cast<std::int64_t>(nx) * ny, spec.jobs, [&](std::int64_t idx) {
    const int ix = static_cast<int>(idx % nx);
    const int iy = static_cast<int>(idx / nx);
    SweepCell cell;
    cell.x_value = axis_value(spec.axis_x, ix);
    cell.y_value = axis_value(spec.axis_y, iy);
    try {
      GameParams p = spec.base;
      *param_by_name(p, spec.axis_x.param) = cell.x_value;
      *param_by_name(p, spec.axis_y.param) = cell.y_value;
      validate_params(p);
      if (spec.engine == EngineKind::Replicator) {
        cell.eta_mean = time_averaged_eta(p, spec.s0, spec.integrator);
        cell.eta_std = 0.0;
        cell.n_replicates = 1;
        if (!std::isfinite(cell.eta_mean)) cell.valid = false;
      } else {
        AbmConfig cfg = spec.abm;
        // replicate seeds are base_seed + cell_index * replicates + r
        cfg.seed = spec.base_seed +
                   static_cast<std::uint64_t>(idx) * static_cast<std::uint64_t>(cfg.replicates);
        const AbmAverage avg = average_cooperation_abm(p, cfg, /*jobs=*/1);
        cell.eta_mean = avg.mean;
        cell.eta_std = avg.stddev;
        cell.n_replicates = cfg.replicates;
      }
    } catch (const std::exception&) {
      cell.valid = false;
      cell.eta_mean = std::numeric_limits<double>::quiet_NaN();
      cell.eta_std = std::numeric_limits<double>::quiet_NaN();
      cell.n_replicates = 0;
    }
    result.cells[static_cast<std::size_t>(idx)] = cell;
  });
  return result;
}

EngineComparison compare_engines(const SweepResult& a, const SweepResult& b) {
  const auto same_axis = [](const AxisSpec& p, const AxisSpec& q) {
    return p.param == q.param && p.min == q.min && p.max == q.max && p.steps == q.steps;
  };
  if (!same_axis(a.spec.axis_x, b.spec.axis_x) || !same_axis(a.spec.axis_y, b.spec.axis_y) ||
      a.cells.size() != b.cells.size()) {
    throw std::invalid_argument("compare_engines: grids do not match");
  }
  EngineComparison cmp;
  cmp.abs_diff.resize(a.cells.size(), std::numeric_limits<double>::quiet_NaN());
  double sum = 0.0;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    if (!a.cells[i].valid || !b.cells[i].valid) continue;
    const double d = std::fabs(a.cells[i].eta_mean - b.cells[i].eta_mean);
    cmp.abs_diff[i] = d;
    sum += d;
    cmp.max_abs_diff = std::max(cmp.max_abs_diff, d);
    ++cmp.compared_cells;
  }
  cmp.mean_abs_diff = cmp.compared_cells > 0 ? sum / cmp.compared_cells : 0.0;
  return cmp;
}

}  // namespace mediagov
