#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace sppn {

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Decimal notation with 9 significant digits.
std::string format_g9(double v);

// Header line plus one line per row, values formatted with format_g9.
std::string render_csv(const ResultTable& table);

// Minimal self-contained line chart: column 0 on a linear x axis, every other
// column as one series on a log10 y axis (non-positive points are skipped),
// legend from the headers.
std::string render_svg(const ResultTable& table);

// Write-temp-then-rename so rerunning into the same directory replaces files
// atomically.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace sppn
