#pragma once

#include <string>

#include "mediagov/csv.hpp"

namespace mediagov {

/// Renders a sweep-result CSV (write_sweep_csv schema) as a standalone
/// SVG 1.1 heatmap: one rect per grid cell coloured by eta over [0,1],
/// axis labels from the parameter names, a colour bar, and a diagonal
/// hatch over invalid cells. Output depends only on the CSV content (no
/// timestamps), so identical input yields identical bytes. Throws
/// std::runtime_error on malformed input or a non-rectangular grid.
std::string render_heatmap_svg(const CsvTable& table);

/// Renders a trajectory CSV or ABM time-series CSV (schema detected from
/// the header) as three stacked panels: user strategy shares, creator
/// strategy shares and eta. Series colours: AllD red, BMedia yellow,
/// GMedia blue, AllC green; Unsafe red, Safe green. ABM counts are
/// normalised by the per-row population totals.
std::string render_timeseries_svg(const CsvTable& table);

/// File-to-file wrappers; read the CSV at csv_path and write the SVG.
void render_heatmap(const std::string& csv_path, const std::string& svg_path);
void render_timeseries(const std::string& csv_path, const std::string& svg_path);

}  // namespace mediagov
