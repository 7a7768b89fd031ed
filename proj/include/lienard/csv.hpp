#pragma once

#include <string>
#include <vector>

namespace lienard {

// Shortest representation carrying 17 significant digits (round-trip exact).
std::string fmt17(double v);

// Fixed precision, for SVG coordinates.
std::string fmt_svg(double v);

// Joins already-formatted fields with commas and a trailing newline.
std::string csv_row(const std::vector<std::string>& fields);

// Parses "a,b,c" into doubles. On a bad token throws std::invalid_argument
// naming the 1-based position.
std::vector<double> parse_number_list(const std::string& text);

}  // namespace lienard
