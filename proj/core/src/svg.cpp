#include "mediagov/svg.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mediagov {

namespace {

double parse_num(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw std::runtime_error("csv field is not numeric: '" + s + "'");
  }
  return v;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// viridis, linearly interpolated between 9 anchors
std::string viridis(double t) {
  static constexpr int anchors[9][3] = {{68, 1, 84},    {72, 40, 120},  {62, 73, 137},
                                        {49, 104, 142}, {38, 130, 142}, {31, 158, 137},
                                        {53, 183, 121}, {110, 206, 88}, {253, 231, 37}};
  t = std::clamp(t, 0.0, 1.0);
  const double pos = t * 8.0;
  const int lo = std::min(7, static_cast<int>(pos));
  const double f = pos - lo;
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                static_cast<int>(std::lround(anchors[lo][0] + f * (anchors[lo + 1][0] - anchors[lo][0]))),
                static_cast<int>(std::lround(anchors[lo][1] + f * (anchors[lo + 1][1] - anchors[lo][1]))),
                static_cast<int>(std::lround(anchors[lo][2] + f * (anchors[lo + 1][2] - anchors[lo][2]))));
  return buf;
}

std::vector<double> unique_sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end(),
                      [](double a, double b) { return std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(a)); }),
          v.end());
  return v;
}

std::size_t index_of(const std::vector<double>& values, double v) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::fabs(values[i] - v) <= 1e-12 * std::max(1.0, std::fabs(v))) return i;
  }
  throw std::runtime_error("grid value lookup failed");
}

struct Series {
  std::string label;
  std::string color;
  std::vector<double> values;
};

void panel(std::ostringstream& svg, double px, double py, double pw, double ph,
           const std::vector<double>& xs, const std::vector<Series>& series,
           const std::string& y_label) {
  const double x_min = xs.front(), x_max = xs.back();
  const double x_span = x_max > x_min ? x_max - x_min : 1.0;
  svg << "<rect x='" << fmt(px) << "' y='" << fmt(py) << "' width='" << fmt(pw) << "' height='"
      << fmt(ph) << "' fill='white' stroke='#888'/>\n";
  for (int g = 1; g < 4; ++g) {
    const double gy = py + ph * g / 4.0;
    svg << "<line x1='" << fmt(px) << "' y1='" << fmt(gy) << "' x2='" << fmt(px + pw) << "' y2='"
        << fmt(gy) << "' stroke='#ddd'/>\n";
  }
  for (double v : {0.0, 0.5, 1.0}) {
    const double gy = py + ph * (1.0 - v);
    svg << "<text x='" << fmt(px - 6) << "' y='" << fmt(gy + 4)
        << "' text-anchor='end' font-size='11'>" << fmt(v) << "</text>\n";
  }
  svg << "<text x='" << fmt(px - 38) << "' y='" << fmt(py + ph / 2)
      << "' font-size='12' transform='rotate(-90 " << fmt(px - 38) << " " << fmt(py + ph / 2)
      << ")' text-anchor='middle'>" << y_label << "</text>\n";

  // thin long series to at most 2000 points, always keeping the last one
  const std::size_t n = xs.size();
  const std::size_t stride = std::max<std::size_t>(1, n / 2000);
  double legend_x = px + 8.0;
  for (const Series& s : series) {
    svg << "<polyline fill='none' stroke='" << s.color << "' stroke-width='1.5' points='";
    for (std::size_t i = 0; i < n; i += stride) {
      const double X = px + (xs[i] - x_min) / x_span * pw;
      const double Y = py + (1.0 - std::clamp(s.values[i], 0.0, 1.0)) * ph;
      svg << fmt(X) << ',' << fmt(Y) << ' ';
    }
    if ((n - 1) % stride != 0) {
      const double X = px + (xs[n - 1] - x_min) / x_span * pw;
      const double Y = py + (1.0 - std::clamp(s.values[n - 1], 0.0, 1.0)) * ph;
      svg << fmt(X) << ',' << fmt(Y);
    }
    svg << "'/>\n";
    svg << "<rect x='" << fmt(legend_x) << "' y='" << fmt(py + 6) << "' width='10' height='10' fill='"
        << s.color << "'/>\n";
    svg << "<text x='" << fmt(legend_x + 13) << "' y='" << fmt(py + 15) << "' font-size='11'>"
        << s.label << "</text>\n";
    legend_x += 13.0 + 7.2 * s.label.size() + 12.0;
  }
}

}  // namespace

std::string render_heatmap_svg(const CsvTable& table) {
  const int cx = table.column("x_value"), cy = table.column("y_value");
  const int ce = table.column("eta_mean"), cv = table.column("valid");
  const int cxp = table.column("x_param"), cyp = table.column("y_param");
  if (cx < 0 || cy < 0 || ce < 0 || cv < 0 || cxp < 0 || cyp < 0) {
    throw std::runtime_error("csv does not match the sweep schema");
  }
  if (table.rows.empty()) throw std::runtime_error("csv has no data rows");

  std::vector<double> xs, ys;
  for (const auto& row : table.rows) {
    xs.push_back(parse_num(row[cx]));
    ys.push_back(parse_num(row[cy]));
  }
  const std::vector<double> ux = unique_sorted(xs), uy = unique_sorted(ys);
  const std::size_t nx = ux.size(), ny = uy.size();
  if (nx * ny != table.rows.size()) {
    throw std::runtime_error("cells do not form a rectangular grid");
  }

  std::vector<double> eta(nx * ny, 0.0);
  std::vector<char> valid(nx * ny, 0), seen(nx * ny, 0);
  for (const auto& row : table.rows) {
    const std::size_t ix = index_of(ux, parse_num(row[cx]));
    const std::size_t iy = index_of(uy, parse_num(row[cy]));
    const std::size_t at = iy * nx + ix;
    if (seen[at]) throw std::runtime_error("duplicate grid cell in csv");
    seen[at] = 1;
    valid[at] = row[cv] == "1" || row[cv] == "true";
    eta[at] = valid[at] ? parse_num(row[ce]) : 0.0;
  }

  const double cell = std::clamp(480.0 / static_cast<double>(std::max(nx, ny)), 6.0, 48.0);
  const double pw = cell * static_cast<double>(nx), ph = cell * static_cast<double>(ny);
  const double mx = 70.0, my = 40.0;
  const double width = mx + pw + 90.0, height = my + ph + 60.0;

  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' version='1.1' width='" << fmt(width)
      << "' height='" << fmt(height) << "' font-family='sans-serif'>\n";
  svg << "<defs><pattern id='hatch' width='6' height='6' patternUnits='userSpaceOnUse'>"
         "<rect width='6' height='6' fill='#e8e8e8'/>"
         "<path d='M0,6 L6,0' stroke='#999' stroke-width='1'/></pattern></defs>\n";
  svg << "<rect width='100%' height='100%' fill='white'/>\n";
  svg << "<text x='" << fmt(mx + pw / 2) << "' y='22' text-anchor='middle' font-size='14'>"
      << "average cooperation ratio</text>\n";

  // cells; y axis increases upward
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const std::size_t at = iy * nx + ix;
      const double X = mx + static_cast<double>(ix) * cell;
      const double Y = my + (static_cast<double>(ny - 1 - iy)) * cell;
      svg << "<rect x='" << fmt(X) << "' y='" << fmt(Y) << "' width='" << fmt(cell)
          << "' height='" << fmt(cell) << "' fill='"
          << (valid[at] ? viridis(eta[at]) : std::string("url(#hatch)")) << "'/>\n";
    }
  }
  svg << "<rect x='" << fmt(mx) << "' y='" << fmt(my) << "' width='" << fmt(pw) << "' height='"
      << fmt(ph) << "' fill='none' stroke='#444'/>\n";

  // axis ticks: first, middle, last grid values
  const auto tick_indices = [](std::size_t n) {
    std::vector<std::size_t> t = {0, n / 2, n - 1};
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
  };
  for (std::size_t ix : tick_indices(nx)) {
    const double X = mx + (static_cast<double>(ix) + 0.5) * cell;
    svg << "<text x='" << fmt(X) << "' y='" << fmt(my + ph + 16)
        << "' text-anchor='middle' font-size='11'>" << fmt(ux[ix]) << "</text>\n";
  }
  for (std::size_t iy : tick_indices(ny)) {
    const double Y = my + (static_cast<double>(ny - 1 - iy) + 0.5) * cell;
    svg << "<text x='" << fmt(mx - 6) << "' y='" << fmt(Y + 4)
        << "' text-anchor='end' font-size='11'>" << fmt(uy[iy]) << "</text>\n";
  }
  svg << "<text x='" << fmt(mx + pw / 2) << "' y='" << fmt(my + ph + 40)
      << "' text-anchor='middle' font-size='13'>" << table.rows.front()[cxp] << "</text>\n";
  svg << "<text x='" << fmt(mx - 44) << "' y='" << fmt(my + ph / 2)
      << "' font-size='13' transform='rotate(-90 " << fmt(mx - 44) << " " << fmt(my + ph / 2)
      << ")' text-anchor='middle'>" << table.rows.front()[cyp] << "</text>\n";

  // colour bar over [0, 1]
  const double bx = mx + pw + 24.0, bw = 16.0;
  const int bands = 64;
  for (int b = 0; b < bands; ++b) {
    const double t0 = static_cast<double>(b) / bands;
    const double Y = my + ph * (1.0 - static_cast<double>(b + 1) / bands);
    svg << "<rect x='" << fmt(bx) << "' y='" << fmt(Y) << "' width='" << fmt(bw) << "' height='"
        << fmt(ph / bands + 0.5) << "' fill='" << viridis(t0 + 0.5 / bands) << "'/>\n";
  }
  svg << "<rect x='" << fmt(bx) << "' y='" << fmt(my) << "' width='" << fmt(bw) << "' height='"
      << fmt(ph) << "' fill='none' stroke='#444'/>\n";
  for (double v : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double Y = my + ph * (1.0 - v);
    svg << "<line x1='" << fmt(bx + bw) << "' y1='" << fmt(Y) << "' x2='" << fmt(bx + bw + 4)
        << "' y2='" << fmt(Y) << "' stroke='#444'/>\n";
    svg << "<text x='" << fmt(bx + bw + 7) << "' y='" << fmt(Y + 4) << "' font-size='11'>"
        << fmt(v) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_timeseries_svg(const CsvTable& table) {
  if (table.rows.empty()) throw std::runtime_error("csv has no data rows");
  const bool trajectory = table.column("t") >= 0 && table.column("x_alld") >= 0;
  const bool abm = table.column("generation") >= 0 && table.column("n_alld") >= 0;
  if (!trajectory && !abm) {
    throw std::runtime_error("csv matches neither the trajectory nor the abm schema");
  }

  const auto col = [&](const char* name) {
    const int c = table.column(name);
    if (c < 0) throw std::runtime_error(std::string("csv is missing column ") + name);
    return c;
  };
  const int c_time = trajectory ? col("t") : col("generation");
  const int c_eta = col("eta");

  std::vector<double> xs;
  Series alld{"AllD", "#d62728", {}}, bmedia{"BMedia", "#d4a800", {}},
      gmedia{"GMedia", "#1f77b4", {}}, allc{"AllC", "#2ca02c", {}};
  Series unsafe_s{"Unsafe", "#d62728", {}}, safe_s{"Safe", "#2ca02c", {}};
  Series eta_s{"eta", "#000000", {}};

  if (trajectory) {
    const int c1 = col("x_alld"), c2 = col("x_bmedia"), c3 = col("x_gmedia"), c4 = col("x_allc");
    const int cy = col("y");
    for (const auto& row : table.rows) {
      xs.push_back(parse_num(row[c_time]));
      alld.values.push_back(parse_num(row[c1]));
      bmedia.values.push_back(parse_num(row[c2]));
      gmedia.values.push_back(parse_num(row[c3]));
      allc.values.push_back(parse_num(row[c4]));
      const double y = parse_num(row[cy]);
      safe_s.values.push_back(y);
      unsafe_s.values.push_back(1.0 - y);
      eta_s.values.push_back(parse_num(row[c_eta]));
    }
  } else {
    const int c1 = col("n_alld"), c2 = col("n_bmedia"), c3 = col("n_gmedia"), c4 = col("n_allc");
    const int cu = col("n_unsafe"), cs = col("n_safe");
    for (const auto& row : table.rows) {
      xs.push_back(parse_num(row[c_time]));
      const double n1 = parse_num(row[c1]), n2 = parse_num(row[c2]), n3 = parse_num(row[c3]),
                   n4 = parse_num(row[c4]);
      const double nu = n1 + n2 + n3 + n4;
      const double du = parse_num(row[cu]), ds = parse_num(row[cs]);
      const double nc = du + ds;
      if (nu <= 0.0 || nc <= 0.0) throw std::runtime_error("abm csv row has empty population");
      alld.values.push_back(n1 / nu);
      bmedia.values.push_back(n2 / nu);
      gmedia.values.push_back(n3 / nu);
      allc.values.push_back(n4 / nu);
      unsafe_s.values.push_back(du / nc);
      safe_s.values.push_back(ds / nc);
      eta_s.values.push_back(parse_num(row[c_eta]));
    }
  }

  const double pw = 640.0, ph = 150.0, mx = 70.0, my = 30.0, gap = 28.0;
  const double width = mx + pw + 20.0, height = my + 3 * ph + 2 * gap + 50.0;
  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' version='1.1' width='" << fmt(width)
      << "' height='" << fmt(height) << "' font-family='sans-serif'>\n";
  svg << "<rect width='100%' height='100%' fill='white'/>\n";
  panel(svg, mx, my, pw, ph, xs, {alld, bmedia, gmedia, allc}, "user share");
  panel(svg, mx, my + ph + gap, pw, ph, xs, {unsafe_s, safe_s}, "creator share");
  panel(svg, mx, my + 2 * (ph + gap), pw, ph, xs, {eta_s}, "eta");
  const double axis_y = my + 3 * ph + 2 * gap;
  for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double x_val = xs.front() + f * (xs.back() - xs.front());
    const double X = mx + f * pw;
    svg << "<text x='" << fmt(X) << "' y='" << fmt(axis_y + 18)
        << "' text-anchor='middle' font-size='11'>" << fmt(x_val) << "</text>\n";
  }
  svg << "<text x='" << fmt(mx + pw / 2) << "' y='" << fmt(axis_y + 38)
      << "' text-anchor='middle' font-size='13'>" << (trajectory ? "t" : "generation")
      << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

void render_heatmap(const std::string& csv_path, const std::string& svg_path) {
  write_text_file(svg_path, render_heatmap_svg(parse_csv(read_text_file(csv_path))));
}

void render_timeseries(const std::string& csv_path, const std::string& svg_path) {
  write_text_file(svg_path, render_timeseries_svg(parse_csv(read_text_file(csv_path))));
}

}  // namespace mediagov
