#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mediagov/abm.hpp"
#include "mediagov/equilibria.hpp"
#include "mediagov/replicator.hpp"
#include "mediagov/sweep.hpp"

namespace mediagov {

// Writers format doubles with "%.17g" so files round-trip bit-exactly and
// identical runs produce identical bytes.

/// Header: t,x_alld,x_bmedia,x_gmedia,x_allc,y,eta
void write_trajectory_csv(std::ostream& os, const Trajectory& t);

/// Header: generation,n_alld,n_bmedia,n_gmedia,n_allc,n_unsafe,n_safe,eta
void write_abm_csv(std::ostream& os, const AbmTimeSeries& ts);

/// Header: state_id,x1,x2,x3,x4,y,outcome,eta_avg
void write_basin_rows_csv(std::ostream& os, std::span<const BasinStateResult> rows);

/// Header: x_param,x_value,y_param,y_value,eta_mean,eta_std,n_replicates,valid
void write_sweep_csv(std::ostream& os, const SweepResult& r);

/// Header: user_strategy,creator_strategy,eig_re_1..4,eig_im_1..4,
///         classification,closed_form_check
void write_equilibria_csv(std::ostream& os, std::span<const EquilibriumReport> reports);

/// Fixed-width text table of the same corner reports.
void print_equilibria_table(std::ostream& os, std::span<const EquilibriumReport> reports);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);  // throws std::runtime_error

/// Minimal CSV reader for the renderers: splits on commas, no quoting
/// (none of the writers emit quotes). Throws std::runtime_error on ragged
/// rows or an empty file.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int column(std::string_view name) const;  // -1 if absent
};
CsvTable parse_csv(const std::string& text);

std::string format_double(double v);  // %.17g, used by all writers

}  // namespace mediagov
