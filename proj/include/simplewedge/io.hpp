#pragma once

#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simplewedge/geometry.hpp"

namespace swedge {

// Point files: one point per nonblank line, two whitespace-separated
// rationals ("-2", "4/3"); '#' comments run to end of line.

/// Throws ParseError carrying the 1-based line number.
std::vector<Point> parse_points(std::istream& in);
std::vector<Point> parse_points(std::string_view text);

/// Canonical form: "x y\n" per point.
std::string write_points(std::span<const Point> points);

/// Reads a point file from disk.  Throws UsageError if it cannot be opened.
std::vector<Point> read_points_file(const std::string& path);

}  // namespace swedge
