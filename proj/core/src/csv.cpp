#include "mediagov/csv.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mediagov {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& t) {
  os << "t,x_alld,x_bmedia,x_gmedia,x_allc,y,eta\n";
  for (std::size_t i = 0; i < t.times.size(); ++i) {
    const PopulationState& s = t.states[i];
    os << format_double(t.times[i]) << ',' << format_double(s.x[0]) << ','
       << format_double(s.x[1]) << ',' << format_double(s.x[2]) << ',' << format_double(s.x[3])
       << ',' << format_double(s.y) << ',' << format_double(t.eta_series[i]) << '\n';
  }
}

void write_abm_csv(std::ostream& os, const AbmTimeSeries& ts) {
  os << "generation,n_alld,n_bmedia,n_gmedia,n_allc,n_unsafe,n_safe,eta\n";
  for (std::size_t g = 0; g < ts.eta.size(); ++g) {
    const auto& u = ts.user_counts[g];
    const auto& c = ts.creator_counts[g];
    os << g << ',' << u[0] << ',' << u[1] << ',' << u[2] << ',' << u[3] << ',' << c[0] << ','
       << c[1] << ',' << format_double(ts.eta[g]) << '\n';
  }
}

void write_basin_rows_csv(std::ostream& os, std::span<const BasinStateResult> rows) {
  os << "state_id,x1,x2,x3,x4,y,outcome,eta_avg\n";
  for (const BasinStateResult& r : rows) {
    os << r.state_id << ',' << format_double(r.start.x[0]) << ',' << format_double(r.start.x[1])
       << ',' << format_double(r.start.x[2]) << ',' << format_double(r.start.x[3]) << ','
       << format_double(r.start.y) << ',' << to_string(r.outcome) << ','
       << format_double(r.eta_avg) << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const SweepResult& r) {
  os << "x_param,x_value,y_param,y_value,eta_mean,eta_std,n_replicates,valid\n";
  for (const SweepCell& c : r.cells) {
    os << r.spec.axis_x.param << ',' << format_double(c.x_value) << ',' << r.spec.axis_y.param
       << ',' << format_double(c.y_value) << ',' << format_double(c.eta_mean) << ','
       << format_double(c.eta_std) << ',' << c.n_replicates << ',' << (c.valid ? 1 : 0) << '\n';
  }
}

void write_equilibria_csv(std::ostream& os, std::span<const EquilibriumReport> reports) {
  os << "user_strategy,creator_strategy,eig_re_1,eig_re_2,eig_re_3,eig_re_4,"
        "eig_im_1,eig_im_2,eig_im_3,eig_im_4,classification,closed_form_check\n";
  for (const EquilibriumReport& r : reports) {
    os << to_string(r.user) << ',' << to_string(r.creator);
    for (const auto& e : r.eigs) os << ',' << format_double(e.real());
    for (const auto& e : r.eigs) os << ',' << format_double(e.imag());
    os << ',' << to_string(r.classification) << ',';
    if (r.closed_form_check.has_value()) os << (*r.closed_form_check ? "true" : "false");
    else os << "n/a";
    os << '\n';
  }
}

void print_equilibria_table(std::ostream& os, std::span<const EquilibriumReport> reports) {
  os << std::left << std::setw(8) << "user" << std::setw(9) << "creator" << std::setw(16)
     << "classification" << std::setw(12) << "closed_form"
     << "eigenvalues (re,im)\n";
  for (const EquilibriumReport& r : reports) {
    os << std::left << std::setw(8) << to_string(r.user) << std::setw(9) << to_string(r.creator)
       << std::setw(16) << to_string(r.classification) << std::setw(12)
       << (r.closed_form_check ? (*r.closed_form_check ? "agree" : "DISAGREE") : "n/a");
    os << std::setprecision(6);
    for (const auto& e : r.eigs) {
      os << " (" << e.real();
      if (e.imag() != 0.0) os << (e.imag() > 0 ? "+" : "") << e.imag() << "i";
      os << ")";
    }
    os << '\n';
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  const auto split = [](const std::string& s) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : s) {
      if (ch == ',') {
        fields.push_back(cur);
        cur.clear();
      } else if (ch != '\r') {
        cur.push_back(ch);
      }
    }
    fields.push_back(cur);
    return fields;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    if (table.header.empty()) {
      table.header = split(line);
      continue;
    }
    auto fields = split(line);
    if (fields.size() != table.header.size()) {
      throw std::runtime_error("csv row has " + std::to_string(fields.size()) +
                               " fields, expected " + std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  if (table.header.empty()) throw std::runtime_error("csv file is empty");
  return table;
}

}  // namespace mediagov
