#include "sppn/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sppn/errors.hpp"

namespace sppn {

std::string format_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string render_csv(const ResultTable& table) {
  std::ostringstream out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << format_g9(row[c]);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 80;
constexpr int kMarginRight = 160;
constexpr int kMarginTop = 24;
constexpr int kMarginBottom = 56;

const char* kPalette[] = {"#4878b0", "#e07b39", "#4f9e63", "#c44e52", "#8172b2",
                          "#937860", "#2f8f9d", "#7f7f7f", "#b5a12d", "#5c3c92"};

std::string fmt_tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string render_svg(const ResultTable& table) {
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;

  double x_lo = 0.0, x_hi = 1.0;
  double log_lo = 0.0, log_hi = 1.0;
  bool has_points = false;
  if (!table.rows.empty() && table.columns.size() >= 2) {
    x_lo = x_hi = table.rows.front()[0];
    for (const auto& row : table.rows) {
      x_lo = std::min(x_lo, row[0]);
      x_hi = std::max(x_hi, row[0]);
      for (std::size_t c = 1; c < row.size(); ++c) {
        if (row[c] > 0.0) {
          const double lg = std::log10(row[c]);
          if (!has_points) {
            log_lo = log_hi = lg;
            has_points = true;
          } else {
            log_lo = std::min(log_lo, lg);
            log_hi = std::max(log_hi, lg);
          }
        }
      }
    }
  }
  if (x_hi == x_lo) {
    x_lo -= 1.0;
    x_hi += 1.0;
  }
  log_lo = std::floor(log_lo);
  log_hi = std::ceil(log_hi);
  if (log_hi == log_lo) log_hi = log_lo + 1.0;

  const auto sx = [&](double x) {
    return kMarginLeft + (x - x_lo) / (x_hi - x_lo) * plot_w;
  };
  const auto sy = [&](double v) {
    return kMarginTop + (1.0 - (std::log10(v) - log_lo) / (log_hi - log_lo)) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  svg << "<g font-family=\"sans-serif\" font-size=\"11\">\n";

  // Decade gridlines and y labels.
  for (double d = log_lo; d <= log_hi + 0.5; d += 1.0) {
    const double y = kMarginTop + (1.0 - (d - log_lo) / (log_hi - log_lo)) * plot_h;
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << y << "\" x2=\""
        << kMarginLeft + plot_w << "\" y2=\"" << y
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\">1e" << static_cast<long>(d) << "</text>\n";
  }

  // X ticks at each swept value when few, else at quartiles.
  std::vector<double> xticks;
  for (const auto& row : table.rows) xticks.push_back(row[0]);
  std::sort(xticks.begin(), xticks.end());
  xticks.erase(std::unique(xticks.begin(), xticks.end()), xticks.end());
  if (xticks.size() > 12) {
    std::vector<double> coarse;
    for (std::size_t i = 0; i < 5; ++i)
      coarse.push_back(xticks[i * (xticks.size() - 1) / 4]);
    xticks = coarse;
  }
  for (double x : xticks) {
    svg << "<line x1=\"" << sx(x) << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\"" << sx(x)
        << "\" y2=\"" << kMarginTop + plot_h + 4 << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << sx(x) << "\" y=\"" << kMarginTop + plot_h + 18
        << "\" text-anchor=\"middle\">" << fmt_tick(x) << "</text>\n";
  }

  // Axes box and x-axis label.
  svg << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (!table.columns.empty())
    svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 16
        << "\" text-anchor=\"middle\">" << table.columns[0] << "</text>\n";

  // One polyline per series; gaps where values are not plottable on a log axis.
  const std::size_t n_series = table.columns.size() > 1 ? table.columns.size() - 1 : 0;
  for (std::size_t s = 0; s < n_series; ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::vector<std::pair<double, double>> segment;
    const auto flush = [&] {
      if (segment.size() >= 2) {
        svg << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.6\" points=\"";
        for (auto [px, py] : segment) svg << px << ',' << py << ' ';
        svg << "\"/>\n";
      }
      for (auto [px, py] : segment)
        svg << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"2.4\" fill=\"" << color
            << "\"/>\n";
      segment.clear();
    };
    for (const auto& row : table.rows) {
      const double v = row[s + 1];
      if (v > 0.0)
        segment.emplace_back(sx(row[0]), sy(v));
      else
        flush();
    }
    flush();

    const double ly = kMarginTop + 14 + 16.0 * static_cast<double>(s);
    svg << "<line x1=\"" << kMarginLeft + plot_w + 10 << "\" y1=\"" << ly - 4 << "\" x2=\""
        << kMarginLeft + plot_w + 28 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color
        << "\" stroke-width=\"1.6\"/>\n";
    svg << "<text x=\"" << kMarginLeft + plot_w + 32 << "\" y=\"" << ly << "\">"
        << table.columns[s + 1] << "</text>\n";
  }

  svg << "</g>\n</svg>\n";
  return svg.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw IoError("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + " to " + path.string());
}

}  // namespace sppn
