#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "mediagov/csv.hpp"
#include "mediagov/kv_config.hpp"
#include "mediagov/manifest.hpp"
#include "mediagov/svg.hpp"

using namespace mediagov;

namespace {

std::string tmp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

Trajectory tiny_trajectory() {
  GameParams p;
  IntegratorConfig cfg;
  cfg.horizon = 5.0;
  cfg.step_size = 0.05;
  cfg.record_stride = 10;
  PopulationState s0;
  return integrate(s0, p, cfg);
}

std::string sweep_csv_2x2(double e00, double e10, double e01, double e11) {
  std::ostringstream os;
  os << "x_param,x_value,y_param,y_value,eta_mean,eta_std,n_replicates,valid\n";
  os << "c_i,0,c_c,0," << e00 << ",0,1,1\n";
  os << "c_i,1,c_c,0," << e10 << ",0,1,1\n";
  os << "c_i,0,c_c,1," << e01 << ",0,1,1\n";
  os << "c_i,1,c_c,1," << e11 << ",0,1,1\n";
  return os.str();
}

}  // namespace

TEST_CASE("key-value parsing accepts both separators, comments and blanks") {
  const KvPairs kv = parse_kv_text("# comment\nb_u = 0.5\n\nc_u 0.9\nq=1\n");
  REQUIRE(kv.size() == 3);
  CHECK(kv[0] == std::pair<std::string, std::string>{"b_u", "0.5"});
  CHECK(kv[1] == std::pair<std::string, std::string>{"c_u", "0.9"});
  CHECK(kv[2] == std::pair<std::string, std::string>{"q", "1"});
  CHECK_THROWS_AS(parse_kv_text("just_a_token\n"), std::invalid_argument);
}

TEST_CASE("key-value round trip and unreadable file") {
  KvPairs kv = {{"alpha", "1"}, {"beta", "two"}};
  const std::string path = tmp_path("mediagov_kv_test.txt");
  write_kv_file(path, kv);
  CHECK(read_kv_file(path) == kv);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_kv_file("/no/such/dir/file.txt"), std::runtime_error);
}

TEST_CASE("parameters from key-value pairs") {
  const GameParams p = params_from_kv({{"b_u", "0.7"}, {"q", "0.55"}});
  CHECK(p.b_u == 0.7);
  CHECK(p.q == 0.55);
  CHECK(p.c_u == 0.8);  // untouched default
  CHECK_THROWS_AS(params_from_kv({{"nope", "1"}}), std::invalid_argument);
  CHECK_THROWS_AS(params_from_kv({{"b_u", "abc"}}), std::invalid_argument);
  const KvPairs out = params_to_kv(p);
  CHECK(out.size() == 6);
  CHECK(params_from_kv(out).b_u == 0.7);
}

TEST_CASE("csv writers emit the frozen headers") {
  std::ostringstream t;
  write_trajectory_csv(t, tiny_trajectory());
  CHECK(t.str().rfind("t,x_alld,x_bmedia,x_gmedia,x_allc,y,eta\n", 0) == 0);

  AbmTimeSeries ts;
  ts.user_counts = {{10, 0, 0, 0}};
  ts.creator_counts = {{5, 0}};
  ts.eta = {0.0};
  std::ostringstream a;
  write_abm_csv(a, ts);
  CHECK(a.str() ==
        "generation,n_alld,n_bmedia,n_gmedia,n_allc,n_unsafe,n_safe,eta\n0,10,0,0,0,5,0,0\n");

  std::ostringstream b;
  write_basin_rows_csv(b, std::vector<BasinStateResult>{});
  CHECK(b.str() == "state_id,x1,x2,x3,x4,y,outcome,eta_avg\n");
}

TEST_CASE("sweep and equilibria csv schemas") {
  SweepSpec spec;
  spec.axis_x = {"c_i", 0.0, 0.5, 2};
  spec.axis_y = {"c_c", 0.0, 0.5, 2};
  spec.integrator.step_size = 0.05;
  spec.integrator.horizon = 200.0;
  const SweepResult r = run_sweep(spec);
  std::ostringstream os;
  write_sweep_csv(os, r);
  const CsvTable table = parse_csv(os.str());
  CHECK(table.header.size() == 8);
  CHECK(table.column("eta_mean") == 4);
  CHECK(table.rows.size() == 4);

  const auto reports = corner_census(GameParams{});
  std::ostringstream eq;
  write_equilibria_csv(eq, reports);
  const CsvTable et = parse_csv(eq.str());
  CHECK(et.header.size() == 12);
  CHECK(et.rows.size() == 8);
  CHECK(et.rows[0][0] == "AllD");
  CHECK(et.rows[0][10] == "stable");
  CHECK(et.rows[0][11] == "true");
  CHECK(et.rows[1][11] == "n/a");
}

TEST_CASE("manifests carry command, version, config, artifacts and duration") {
  RunManifest m;
  m.command = "sweep";
  m.set("seed", std::uint64_t{42});
  m.set("eta", 0.5);
  m.artifacts = {"a.csv", "b.svg"};
  m.duration_seconds = 1.25;
  const KvPairs kv = m.to_kv();
  REQUIRE(kv.size() == 7);
  CHECK(kv[0] == std::pair<std::string, std::string>{"command", "sweep"});
  CHECK(kv[1].first == "version");
  CHECK(kv[2] == std::pair<std::string, std::string>{"seed", "42"});
  CHECK(kv[4] == std::pair<std::string, std::string>{"artifact_0", "a.csv"});
  CHECK(kv[6].first == "duration_seconds");
}

TEST_CASE("csv parsing rejects ragged and empty input") {
  CHECK_THROWS_AS(parse_csv(""), std::runtime_error);
  CHECK_THROWS_AS(parse_csv("a,b\n1,2,3\n"), std::runtime_error);
  const CsvTable t = parse_csv("a,b\r\n1,2\n");
  CHECK(t.header == std::vector<std::string>{"a", "b"});
  CHECK(t.rows.size() == 1);
  CHECK(t.column("b") == 1);
  CHECK(t.column("zzz") == -1);
}

TEST_CASE("heatmap svg: extreme cells, determinism, error paths") {
  const CsvTable table = parse_csv(sweep_csv_2x2(0.0, 1.0, 1.0, 0.0));
  const std::string svg = render_heatmap_svg(table);
  CHECK(svg.find("#440154") != std::string::npos);  // eta = 0 end of the scale
  CHECK(svg.find("#fde725") != std::string::npos);  // eta = 1 end
  CHECK(svg.find("c_i") != std::string::npos);
  CHECK(svg.find("c_c") != std::string::npos);
  CHECK(svg == render_heatmap_svg(table));  // byte-stable

  // count cell rects: 4 cells + frame + colour bar bands + bar frame
  std::size_t rects = 0;
  for (std::size_t at = svg.find("<rect"); at != std::string::npos;
       at = svg.find("<rect", at + 1)) {
    ++rects;
  }
  CHECK(rects == 4 + 2 + 64 + 2);  // cells, background+frame, bar bands, bar frame + pattern rect

  CHECK_THROWS_AS(render_heatmap_svg(parse_csv("a,b\n1,2\n")), std::runtime_error);
  // non-rectangular: 3 cells for a 2x2 value grid
  std::string ragged = "x_param,x_value,y_param,y_value,eta_mean,eta_std,n_replicates,valid\n";
  ragged += "c_i,0,c_c,0,0.5,0,1,1\nc_i,1,c_c,0,0.5,0,1,1\nc_i,0,c_c,1,0.5,0,1,1\n";
  CHECK_THROWS_AS(render_heatmap_svg(parse_csv(ragged)), std::runtime_error);
}

TEST_CASE("invalid sweep cells are hatched") {
  std::string csv = "x_param,x_value,y_param,y_value,eta_mean,eta_std,n_replicates,valid\n";
  csv += "c_i,0,c_c,0,0.5,0,1,1\nc_i,1,c_c,0,nan,nan,0,0\n";
  csv += "c_i,0,c_c,1,0.25,0,1,1\nc_i,1,c_c,1,0.75,0,1,1\n";
  const std::string svg = render_heatmap_svg(parse_csv(csv));
  CHECK(svg.find("url(#hatch)") != std::string::npos);
}

TEST_CASE("timeseries svg: trajectory schema, abm schema, flat corner run") {
  const Trajectory t = tiny_trajectory();
  std::ostringstream os;
  write_trajectory_csv(os, t);
  const std::string svg = render_timeseries_svg(parse_csv(os.str()));
  std::size_t polylines = 0;
  for (std::size_t at = svg.find("<polyline"); at != std::string::npos;
       at = svg.find("<polyline", at + 1)) {
    ++polylines;
  }
  CHECK(polylines == 7);  // 4 user + 2 creator + eta
  CHECK(svg.find("#1f77b4") != std::string::npos);  // GMedia blue
  CHECK(svg.find("#2ca02c") != std::string::npos);  // AllC / Safe green

  AbmTimeSeries ts;
  for (int g = 0; g <= 3; ++g) {
    ts.user_counts.push_back({g, 10 - g, 0, 0});
    ts.creator_counts.push_back({5, 5});
    ts.eta.push_back(0.25);
  }
  std::ostringstream ab;
  write_abm_csv(ab, ts);
  CHECK(render_timeseries_svg(parse_csv(ab.str())).find("generation") != std::string::npos);

  CHECK_THROWS_AS(render_timeseries_svg(parse_csv("a,b\n1,2\n")), std::runtime_error);
}

TEST_CASE("file-to-file rendering wrappers") {
  const std::string csv_path = tmp_path("mediagov_heat_test.csv");
  const std::string svg_path = tmp_path("mediagov_heat_test.svg");
  write_text_file(csv_path, sweep_csv_2x2(0.1, 0.2, 0.3, 0.4));
  render_heatmap(csv_path, svg_path);
  CHECK(read_text_file(svg_path).rfind("<svg", 0) == 0);
  std::filesystem::remove(csv_path);
  std::filesystem::remove(svg_path);
  CHECK_THROWS_AS(render_heatmap("/no/such/file.csv", svg_path), std::runtime_error);
}
