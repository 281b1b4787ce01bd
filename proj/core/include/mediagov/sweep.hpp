#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mediagov/abm.hpp"
#include "mediagov/params.hpp"
#include "mediagov/replicator.hpp"

namespace mediagov {

enum class EngineKind { Replicator, Abm };

std::string_view to_string(EngineKind k);

/// One sweep axis: a parameter name (b_u, c_u, b_c, c_c, c_i or q) and an
/// inclusive linear range with `steps` grid points (steps >= 2).
struct AxisSpec {
  std::string param;
  double min = 0.0;
  double max = 0.0;
  int steps = 0;
};

struct SweepSpec {
  AxisSpec axis_x;
  AxisSpec axis_y;
  GameParams base;
  EngineKind engine = EngineKind::Replicator;
  IntegratorConfig integrator;  // replicator engine
  AbmConfig abm;                // ABM engine (its seed field is ignored; see base_seed)
  PopulationState s0;           // replicator start (default: uniform users, y = 0.5)
  std::uint64_t base_seed = 0;
  int jobs = 0;
};

/// Throws std::invalid_argument on bad axis names, axis_x == axis_y or
/// steps < 2.
void validate_sweep_spec(const SweepSpec& spec);

struct SweepCell {
  double x_value = 0.0;
  double y_value = 0.0;
  double eta_mean = 0.0;
  double eta_std = 0.0;  // over ABM replicates; 0 for the replicator engine
  int n_replicates = 1;
  bool valid = true;  // false: parameters rejected or integration failed
};

/// Row-major grid: cell index = iy * axis_x.steps + ix.
struct SweepResult {
  SweepSpec spec;
  std::vector<SweepCell> cells;
};

/// Evaluates eta at every grid cell with the selected engine. Per-cell
/// failures mark the cell invalid and never abort the grid. Deterministic
/// for a fixed spec: ABM replicate seeds are the pure function
/// base_seed + cell_index * replicates + replicate_index.
SweepResult run_sweep(const SweepSpec& spec);

struct EngineComparison {
  std::vector<double> abs_diff;  // per cell; NaN where either cell is invalid
  double mean_abs_diff = 0.0;    // over cells valid in both grids
  double max_abs_diff = 0.0;
  int compared_cells = 0;
};

/// Cellwise |eta_a - eta_b|. Throws std::invalid_argument unless both
/// results share identical axes.
EngineComparison compare_engines(const SweepResult& a, const SweepResult& b);

}  // namespace mediagov
