#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vit/sweep.hpp"

namespace vit {

// Shortest decimal that round-trips to the same double.
std::string format_number(double x);

// Header line, comma delimiter, LF endings. Empty cells for missing values,
// flags as true/false.
void write_csv(const Table& t, std::ostream& out);
void emit_csv(const Table& t, const std::filesystem::path& path);

struct SvgSpec {
  std::string x_column;
  std::vector<std::string> y_columns;
  // When set, one series per distinct value of this column (sweep over two axes).
  std::optional<std::string> group_column;
  std::string title;
  int width = 720;
  int height = 480;
};

// Default plot for a table: first column against every numeric column
// except flags; two-axis sweeps grouped by their first column.
SvgSpec default_svg_spec(const Table& t);

std::string render_svg(const Table& t, const SvgSpec& spec);
void emit_svg(const Table& t, const std::filesystem::path& path, const SvgSpec& spec);

}  // namespace vit
