// Experiment command line: selection-dynamics runs, corner stability
// reports, finite-population simulations, parameter sweeps and SVG
// rendering. Every subcommand writes a manifest with its resolved
// configuration; all randomness is seeded (default seed 0, never the
// clock).
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mediagov/abm.hpp"
#include "mediagov/csv.hpp"
#include "mediagov/equilibria.hpp"
#include "mediagov/kv_config.hpp"
#include "mediagov/manifest.hpp"
#include "mediagov/params.hpp"
#include "mediagov/replicator.hpp"
#include "mediagov/svg.hpp"
#include "mediagov/sweep.hpp"

namespace fs = std::filesystem;
using namespace mediagov;

namespace {

struct CommonOpts {
  GameParams params;
  std::string config_path;
  std::uint64_t seed = 0;
  int jobs = 0;
  std::string out_dir = ".";
  // set by CLI11 when the individual flags were given on the command line
  CLI::Option* flag[6] = {};
};

// Registers --b_u .. --q, --config, --seed, --jobs, --out on a subcommand.
// Precedence: explicit flag > config file > built-in default.
void add_common(CLI::App* cmd, CommonOpts& o) {
  static const char* descriptions[6] = {
      "user benefit from safe adoption",    "user cost from unsafe adoption",
      "creator benefit from adoption",      "surplus cost of safe creation",
      "cost of an informed recommendation", "probability a good recommendation is correct"};
  for (std::size_t i = 0; i < kParamNames.size(); ++i) {
    o.flag[i] = cmd->add_option("--" + std::string(kParamNames[i]),
                                *param_by_name(o.params, kParamNames[i]), descriptions[i]);
  }
  cmd->add_option("--config", o.config_path, "flat key-value parameter file");
  cmd->add_option("--seed", o.seed, "base RNG seed (default 0)");
  cmd->add_option("--jobs", o.jobs, "worker threads (0 = hardware concurrency)");
  cmd->add_option("--out", o.out_dir, "output directory");
}

// Applies config-file values beneath any explicit command-line flags.
GameParams resolve_params(const CommonOpts& o) {
  GameParams p = o.params;
  if (!o.config_path.empty()) {
    GameParams from_file = params_from_kv(read_kv_file(o.config_path));
    for (std::size_t i = 0; i < kParamNames.size(); ++i) {
      if (o.flag[i]->count() == 0) {
        *param_by_name(p, kParamNames[i]) = *param_by_name(from_file, kParamNames[i]);
      }
    }
  }
  validate_params(p);
  for (const std::string& w : param_warnings(p)) std::cerr << "warning: " << w << "\n";
  return p;
}

void add_params_to_manifest(RunManifest& m, const GameParams& p) {
  for (const auto& [k, v] : params_to_kv(p)) m.set(k, v);
}

std::string out_path(const CommonOpts& o, const std::string& name) {
  fs::create_directories(o.out_dir);
  return (fs::path(o.out_dir) / name).string();
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

DynamicsForm parse_form(const std::string& name) {
  if (name == "literal") return DynamicsForm::PaperExact;
  if (name == "textbook") return DynamicsForm::Textbook;
  throw CLI::ValidationError("--form", "must be 'literal' or 'textbook'");
}

void manifest_integrator(RunManifest& m, const IntegratorConfig& cfg) {
  m.set("step_size", cfg.step_size);
  m.set("horizon", cfg.horizon);
  m.set("record_stride", static_cast<std::int64_t>(cfg.record_stride));
  m.set("convergence_epsilon", cfg.convergence_epsilon);
  m.set("corner_epsilon", cfg.corner_epsilon);
  m.set("form", cfg.form == DynamicsForm::PaperExact ? "literal" : "textbook");
}

void manifest_abm(RunManifest& m, const AbmConfig& cfg) {
  m.set("n_users", static_cast<std::int64_t>(cfg.n_users));
  m.set("n_creators", static_cast<std::int64_t>(cfg.n_creators));
  m.set("beta_u", cfg.beta_u);
  m.set("beta_c", cfg.beta_c);
  m.set("mu_u", cfg.mu_u);
  m.set("mu_c", cfg.mu_c);
  m.set("generations", static_cast<std::int64_t>(cfg.generations));
  m.set("burn_in_fraction", cfg.burn_in_fraction);
  m.set("seed", cfg.seed);
  m.set("replicates", static_cast<std::int64_t>(cfg.replicates));
  m.set("paired_updates", cfg.paired_updates);
}

int run_replicator_run(const CommonOpts& o, const IntegratorConfig& cfg,
                       const std::vector<double>& x0, double y0, bool svg) {
  Timer timer;
  const GameParams p = resolve_params(o);
  IntegratorConfig c = cfg;
  PopulationState s0;
  if (!x0.empty()) {
    if (x0.size() != 4) throw std::invalid_argument("--x0 needs exactly 4 values");
    s0.x = {x0[0], x0[1], x0[2], x0[3]};
  }
  s0.y = y0;
  if (!is_valid_state(s0)) throw std::invalid_argument("initial state is not a valid mixture");

  const Trajectory t = integrate(s0, p, c);
  const TrajectoryOutcome outcome = classify_outcome(t, p, c);

  const std::string csv_path = out_path(o, "trajectory.csv");
  std::ostringstream csv;
  write_trajectory_csv(csv, t);
  write_text_file(csv_path, csv.str());

  RunManifest m;
  m.command = "replicator run";
  add_params_to_manifest(m, p);
  manifest_integrator(m, c);
  m.set("x0", format_double(s0.x[0]) + " " + format_double(s0.x[1]) + " " +
                  format_double(s0.x[2]) + " " + format_double(s0.x[3]));
  m.set("y0", s0.y);
  m.artifacts.push_back(csv_path);
  if (svg) {
    const std::string svg_path = out_path(o, "trajectory.svg");
    render_timeseries(csv_path, svg_path);
    m.artifacts.push_back(svg_path);
  }
  m.duration_seconds = timer.seconds();
  write_manifest(out_path(o, "manifest.txt"), m);

  std::cout << "outcome: " << to_string(outcome.kind)
            << "\ntime_averaged_eta: " << format_double(outcome.time_averaged_eta)
            << "\nterminal: x=(" << format_double(outcome.terminal.x[0]) << ", "
            << format_double(outcome.terminal.x[1]) << ", " << format_double(outcome.terminal.x[2])
            << ", " << format_double(outcome.terminal.x[3])
            << ") y=" << format_double(outcome.terminal.y)
            << "\nmax_projection_drift: " << format_double(t.max_projection_drift) << "\n";
  return 0;
}

int run_replicator_basin(const CommonOpts& o, const IntegratorConfig& cfg, double grid_step,
                         bool write_rows) {
  Timer timer;
  const GameParams p = resolve_params(o);
  std::vector<BasinStateResult> rows;
  const BasinCensus census =
      basin_census(p, grid_step, cfg, o.jobs, write_rows ? &rows : nullptr);

  RunManifest m;
  m.command = "replicator basin";
  add_params_to_manifest(m, p);
  manifest_integrator(m, cfg);
  m.set("grid_step", grid_step);
  m.set("jobs", static_cast<std::int64_t>(o.jobs));

  if (write_rows) {
    const std::string rows_path = out_path(o, "basin_states.csv");
    std::ostringstream csv;
    write_basin_rows_csv(csv, rows);
    write_text_file(rows_path, csv.str());
    m.artifacts.push_back(rows_path);
  }
  nlohmann::json summary = {
      {"total_states", census.total_states},
      {"defection_fraction", census.defection_fraction},
      {"mean_eta", census.mean_eta},
      {"grid_step", census.grid_step},
      {"failures", census.failures},
  };
  const std::string summary_path = out_path(o, "basin_summary.json");
  write_text_file(summary_path, summary.dump(2) + "\n");
  m.artifacts.push_back(summary_path);
  m.duration_seconds = timer.seconds();
  write_manifest(out_path(o, "manifest.txt"), m);

  std::cout << "states: " << census.total_states
            << "\ndefection_fraction: " << format_double(census.defection_fraction)
            << "\nmean_eta: " << format_double(census.mean_eta)
            << "\nfailures: " << census.failures << "\n";
  return 0;
}

int run_equilibria(const CommonOpts& o, const std::string& form_name, bool csv) {
  Timer timer;
  const GameParams p = resolve_params(o);
  const DynamicsForm form = parse_form(form_name);
  const std::vector<EquilibriumReport> reports = corner_census(p, form);

  print_equilibria_table(std::cout, reports);

  RunManifest m;
  m.command = "equilibria";
  add_params_to_manifest(m, p);
  m.set("form", form_name);
  if (csv) {
    const std::string csv_path = out_path(o, "equilibria.csv");
    std::ostringstream os;
    write_equilibria_csv(os, reports);
    write_text_file(csv_path, os.str());
    m.artifacts.push_back(csv_path);
  }
  m.duration_seconds = timer.seconds();
  write_manifest(out_path(o, "manifest.txt"), m);
  return 0;
}

int run_abm_cmd(const CommonOpts& o, AbmConfig cfg, const std::string& init, bool svg) {
  Timer timer;
  const GameParams p = resolve_params(o);
  cfg.seed = o.seed;
  validate_abm_config(cfg);

  std::optional<AgentPopulations> initial;
  if (init == "all-defect") {
    initial = homogeneous_populations(cfg.n_users, cfg.n_creators, UserStrategy::AllD,
                                      CreatorStrategy::Unsafe);
  } else if (init == "all-coop") {
    initial = homogeneous_populations(cfg.n_users, cfg.n_creators, UserStrategy::AllC,
                                      CreatorStrategy::Safe);
  } else if (init != "random") {
    throw std::invalid_argument("--init must be random, all-defect or all-coop");
  }

  const AbmTimeSeries ts = run_abm(p, cfg, initial);

  const std::string csv_path = out_path(o, "abm_series.csv");
  std::ostringstream csv;
  write_abm_csv(csv, ts);
  write_text_file(csv_path, csv.str());

  // sidecar metadata next to the series
  RunManifest meta;
  meta.command = "abm run";
  add_params_to_manifest(meta, p);
  manifest_abm(meta, cfg);
  meta.set("init", init);
  write_kv_file(csv_path + ".meta", meta.to_kv());

  RunManifest m = meta;
  m.artifacts.push_back(csv_path);
  m.artifacts.push_back(csv_path + ".meta");
  if (svg) {
    const std::string svg_path = out_path(o, "abm_series.svg");
    render_timeseries(csv_path, svg_path);
    m.artifacts.push_back(svg_path);
  }
  m.duration_seconds = timer.seconds();
  write_manifest(out_path(o, "manifest.txt"), m);

  std::cout << "generations: " << cfg.generations
            << "\nmean_eta_after_burn_in: " << format_double(mean_eta_after_burn_in(ts, cfg))
            << "\n";
  return 0;
}

AxisSpec parse_axis(const std::string& text) {
  // name:min:max:steps
  AxisSpec a;
  std::istringstream in(text);
  std::string field;
  std::vector<std::string> fields;
  while (std::getline(in, field, ':')) fields.push_back(field);
  if (fields.size() != 4) {
    throw std::invalid_argument("axis spec must be name:min:max:steps, got '" + text + "'");
  }
  a.param = fields[0];
  a.min = std::stod(fields[1]);
  a.max = std::stod(fields[2]);
  a.steps = std::stoi(fields[3]);
  return a;
}

int run_sweep_cmd(const CommonOpts& o, const std::string& engine, const std::string& x_axis,
                  const std::string& y_axis, const IntegratorConfig& icfg, const AbmConfig& acfg,
                  bool svg) {
  Timer timer;
  SweepSpec spec;
  spec.base = resolve_params(o);
  spec.axis_x = parse_axis(x_axis);
  spec.axis_y = parse_axis(y_axis);
  if (engine == "replicator") spec.engine = EngineKind::Replicator;
  else if (engine == "abm") spec.engine = EngineKind::Abm;
  else throw std::invalid_argument("--engine must be replicator or abm");
  spec.integrator = icfg;
  spec.abm = acfg;
  spec.base_seed = o.seed;
  spec.jobs = o.jobs;
  validate_sweep_spec(spec);

  const SweepResult result = run_sweep(spec);

  const std::string csv_path = out_path(o, "sweep.csv");
  std::ostringstream csv;
  write_sweep_csv(csv, result);
  write_text_file(csv_path, csv.str());

  RunManifest m;
  m.command = "sweep";
  add_params_to_manifest(m, spec.base);
  m.set("engine", engine);
  m.set("axis_x", x_axis);
  m.set("axis_y", y_axis);
  m.set("base_seed", spec.base_seed);
  m.set("jobs", static_cast<std::int64_t>(spec.jobs));
  if (spec.engine == EngineKind::Replicator) manifest_integrator(m, spec.integrator);
  else manifest_abm(m, spec.abm);
  m.artifacts.push_back(csv_path);
  if (svg) {
    const std::string svg_path = out_path(o, "sweep.svg");
    render_heatmap(csv_path, svg_path);
    m.artifacts.push_back(svg_path);
  }
  m.duration_seconds = timer.seconds();
  write_manifest(out_path(o, "sweep_manifest.txt"), m);

  int invalid = 0;
  for (const SweepCell& c : result.cells) invalid += c.valid ? 0 : 1;
  std::cout << "cells: " << result.cells.size() << "\ninvalid_cells: " << invalid << "\n";
  return 0;
}

int run_render(const std::string& in_csv, const std::string& out_svg, const std::string& type) {
  Timer timer;
  const CsvTable table = parse_csv(read_text_file(in_csv));
  std::string resolved = type;
  if (resolved == "auto") {
    if (table.column("eta_mean") >= 0) resolved = "heatmap";
    else resolved = "timeseries";
  }
  if (resolved == "heatmap") write_text_file(out_svg, render_heatmap_svg(table));
  else if (resolved == "timeseries") write_text_file(out_svg, render_timeseries_svg(table));
  else throw std::invalid_argument("--type must be auto, heatmap or timeseries");

  RunManifest m;
  m.command = "render";
  m.set("in", in_csv);
  m.set("type", resolved);
  m.artifacts.push_back(out_svg);
  m.duration_seconds = timer.seconds();
  write_manifest(out_svg + ".manifest", m);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-population game experiments: users, creators and media recommendations"};
  app.require_subcommand(1);

  // replicator
  CLI::App* replicator = app.add_subcommand("replicator", "infinite-population dynamics");
  replicator->require_subcommand(1);

  CommonOpts run_opts;
  IntegratorConfig run_cfg;
  std::vector<double> x0;
  double y0 = 0.5;
  std::string run_form = "literal";
  bool run_svg = true;
  CLI::App* rep_run = replicator->add_subcommand("run", "integrate one trajectory");
  add_common(rep_run, run_opts);
  rep_run->add_option("--x0", x0, "initial user frequencies (4 values)")->expected(4);
  rep_run->add_option("--y0", y0, "initial creator cooperator frequency");
  rep_run->add_option("--horizon", run_cfg.horizon, "integration time");
  rep_run->add_option("--step", run_cfg.step_size, "RK4 step size");
  rep_run->add_option("--stride", run_cfg.record_stride, "record every N-th step");
  rep_run->add_option("--form", run_form, "dynamics form")
      ->check(CLI::IsMember({"literal", "textbook"}));
  rep_run->add_flag("--svg,!--no-svg", run_svg, "render the trajectory SVG");

  CommonOpts basin_opts;
  IntegratorConfig basin_cfg;
  basin_cfg.step_size = 0.02;
  basin_cfg.horizon = 3000.0;
  double grid_step = 0.04;
  bool basin_rows = true;
  std::string basin_form = "literal";
  CLI::App* rep_basin = replicator->add_subcommand("basin", "basin-of-attraction census");
  add_common(rep_basin, basin_opts);
  rep_basin->add_option("--grid-step", grid_step, "frequency grid step (must divide 1)");
  rep_basin->add_option("--horizon", basin_cfg.horizon, "integration time per state");
  rep_basin->add_option("--step", basin_cfg.step_size, "RK4 step size");
  rep_basin->add_option("--form", basin_form, "dynamics form")
      ->check(CLI::IsMember({"literal", "textbook"}));
  rep_basin->add_flag("--rows,!--no-rows", basin_rows, "write the per-state csv (on by default)");

  // equilibria
  CommonOpts eq_opts;
  std::string eq_form = "textbook";
  bool eq_csv = false;
  CLI::App* equilibria = app.add_subcommand("equilibria", "corner stability report");
  add_common(equilibria, eq_opts);
  equilibria
      ->add_option("--form", eq_form,
                   "dynamics form for the Jacobian "
                   "(literal linearises degenerately at corners)")
      ->check(CLI::IsMember({"textbook", "literal"}));
  equilibria->add_flag("--csv", eq_csv, "also write equilibria.csv");

  // abm
  CLI::App* abm = app.add_subcommand("abm", "finite-population simulation");
  abm->require_subcommand(1);
  CommonOpts abm_opts;
  AbmConfig abm_cfg;
  bool abm_mu_u_given = false, abm_mu_c_given = false;
  std::string abm_init = "random";
  bool abm_svg = true;
  CLI::App* abm_run = abm->add_subcommand("run", "run one seeded simulation");
  add_common(abm_run, abm_opts);
  abm_run->add_option("--n-users", abm_cfg.n_users, "user population size");
  abm_run->add_option("--n-creators", abm_cfg.n_creators, "creator population size");
  abm_run->add_option("--beta-u", abm_cfg.beta_u, "user selection strength");
  abm_run->add_option("--beta-c", abm_cfg.beta_c, "creator selection strength");
  auto* opt_mu_u = abm_run->add_option("--mu-u", abm_cfg.mu_u, "user mutation prob (default 1/N_U)");
  auto* opt_mu_c =
      abm_run->add_option("--mu-c", abm_cfg.mu_c, "creator mutation prob (default 1/N_C)");
  abm_run->add_option("--gens", abm_cfg.generations, "generations");
  abm_run->add_option("--burn-in", abm_cfg.burn_in_fraction, "burn-in fraction");
  abm_run->add_flag("--paired,!--no-paired", abm_cfg.paired_updates,
                    "update one user and one creator per step");
  abm_run->add_option("--init", abm_init, "initial state")
      ->check(CLI::IsMember({"random", "all-defect", "all-coop"}));
  abm_run->add_flag("--svg,!--no-svg", abm_svg, "render the time-series SVG");
  abm_run->callback([&] {
    abm_mu_u_given = opt_mu_u->count() > 0;
    abm_mu_c_given = opt_mu_c->count() > 0;
  });

  // sweep
  CommonOpts sweep_opts;
  std::string sweep_engine = "replicator", sweep_x = "c_i:0:0.5:21", sweep_y = "c_c:0:0.5:21";
  IntegratorConfig sweep_icfg;
  sweep_icfg.step_size = 0.02;
  sweep_icfg.horizon = 3000.0;
  AbmConfig sweep_acfg;
  sweep_acfg.replicates = 20;
  bool sweep_svg = true;
  bool sweep_full = false;
  CLI::App* sweep = app.add_subcommand("sweep", "2-D parameter grid");
  add_common(sweep, sweep_opts);
  sweep->add_option("--engine", sweep_engine, "evaluation engine")
      ->check(CLI::IsMember({"replicator", "abm"}));
  sweep->add_option("--x", sweep_x, "x axis as name:min:max:steps");
  sweep->add_option("--y", sweep_y, "y axis as name:min:max:steps");
  sweep->add_option("--horizon", sweep_icfg.horizon, "replicator: integration time");
  sweep->add_option("--step", sweep_icfg.step_size, "replicator: RK4 step size");
  sweep->add_option("--replicates", sweep_acfg.replicates, "abm: replicates per cell");
  sweep->add_option("--gens", sweep_acfg.generations, "abm: generations");
  sweep->add_option("--n-users", sweep_acfg.n_users, "abm: user population size");
  sweep->add_option("--n-creators", sweep_acfg.n_creators, "abm: creator population size");
  sweep->add_flag("--full", sweep_full, "paper-scale abm replicates (R=100)");
  sweep->add_flag("--svg,!--no-svg", sweep_svg, "render the heatmap SVG");

  // render
  std::string render_in, render_out, render_type = "auto";
  CLI::App* render = app.add_subcommand("render", "csv to svg");
  render->add_option("--in", render_in, "input csv")->required();
  render->add_option("--svg", render_out, "output svg path")->required();
  render->add_option("--type", render_type, "rendering mode")
      ->check(CLI::IsMember({"auto", "heatmap", "timeseries"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  try {
    if (rep_run->parsed()) {
      run_cfg.form = parse_form(run_form);
      return run_replicator_run(run_opts, run_cfg, x0, y0, run_svg);
    }
    if (rep_basin->parsed()) {
      basin_cfg.form = parse_form(basin_form);
      return run_replicator_basin(basin_opts, basin_cfg, grid_step, basin_rows);
    }
    if (equilibria->parsed()) return run_equilibria(eq_opts, eq_form, eq_csv);
    if (abm_run->parsed()) {
      if (!abm_mu_u_given) abm_cfg.mu_u = 1.0 / abm_cfg.n_users;
      if (!abm_mu_c_given) abm_cfg.mu_c = 1.0 / abm_cfg.n_creators;
      return run_abm_cmd(abm_opts, abm_cfg, abm_init, abm_svg);
    }
    if (sweep->parsed()) {
      if (sweep_full) sweep_acfg.replicates = 100;
      sweep_acfg.mu_u = 1.0 / sweep_acfg.n_users;
      sweep_acfg.mu_c = 1.0 / sweep_acfg.n_creators;
      return run_sweep_cmd(sweep_opts, sweep_engine, sweep_x, sweep_y, sweep_icfg, sweep_acfg,
                           sweep_svg);
    }
    if (render->parsed()) return run_render(render_in, render_out, render_type);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
