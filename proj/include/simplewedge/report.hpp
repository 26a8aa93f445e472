#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "simplewedge/wedge.hpp"

namespace swedge {

/// Everything `analyze` reports about a configuration.
struct AnalysisReport {
  std::size_t n = 0;
  std::size_t line_count = 0;
  std::map<std::size_t, std::size_t> line_size_histogram;  // size -> count
  std::size_t max_line_size = 0;
  bool three_bounded = false;
  std::vector<SimpleLine> simple_lines;
  std::vector<WedgeCertificate> wedges;
  CoverageReport coverage;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const Configuration& config);

/// JSON document with keys n, lines {count, size_histogram}, simple_lines,
/// max_line_size, three_bounded, wedges, coverage.
std::string report_to_json(const AnalysisReport& report, int indent = 2);
/// Inverse of report_to_json.  Throws ParseError (line 0) on malformed
/// documents.
AnalysisReport report_from_json(const std::string& text);

std::string report_to_text(const AnalysisReport& report);

}  // namespace swedge
