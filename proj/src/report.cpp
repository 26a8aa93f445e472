#include "simplewedge/report.hpp"

#include <limits>
#include <sstream>

#include <json.hpp>

#include "simplewedge/errors.hpp"

namespace swedge {
namespace {

using nlohmann::json;

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError(0, "expected integer");
}

json key_to_json(const LineKey& key) {
  return json::array({big_to_json(key.a()), big_to_json(key.b()), big_to_json(key.c())});
}

LineKey key_from_json(const json& j) {
  return LineKey(big_from_json(j.at(0)), big_from_json(j.at(1)), big_from_json(j.at(2)));
}

json simple_to_json(const SimpleLine& line) {
  return {{"key", key_to_json(line.key)},
          {"endpoints", {line.endpoints.first, line.endpoints.second}}};
}

SimpleLine simple_from_json(const json& j) {
  const auto& ends = j.at("endpoints");
  return SimpleLine{key_from_json(j.at("key")),
                    {ends.at(0).get<std::size_t>(), ends.at(1).get<std::size_t>()}};
}

json wedge_to_json(const WedgeCertificate& w) {
  return {{"apex", w.apex},
          {"arms", {w.arm1, w.arm2}},
          {"keys", {key_to_json(w.key1), key_to_json(w.key2)}}};
}

WedgeCertificate wedge_from_json(const json& j) {
  const auto& arms = j.at("arms");
  const auto& keys = j.at("keys");
  return WedgeCertificate{j.at("apex").get<std::size_t>(), arms.at(0).get<std::size_t>(),
                          arms.at(1).get<std::size_t>(), key_from_json(keys.at(0)),
                          key_from_json(keys.at(1))};
}

}  // namespace

AnalysisReport analyze(const Configuration& config) {
  AnalysisReport report;
  const auto& inc = config.incidence();
  report.n = config.size();
  report.line_count = inc.lines().size();
  for (const auto& line : inc.lines()) ++report.line_size_histogram[line.points.size()];
  report.max_line_size = inc.max_line_size();
  report.three_bounded = report.max_line_size <= 3;
  report.simple_lines = simple_lines(config);
  report.wedges = brute_force_wedges(config);
  report.coverage = wedge_coverage(config, report.wedges);
  return report;
}

std::string report_to_json(const AnalysisReport& report, int indent) {
  json histogram = json::object();
  for (const auto& [size, count] : report.line_size_histogram) {
    histogram[std::to_string(size)] = count;
  }
  json simple = json::array();
  for (const auto& line : report.simple_lines) simple.push_back(simple_to_json(line));
  json wedges = json::array();
  for (const auto& w : report.wedges) wedges.push_back(wedge_to_json(w));
  json coverage = json::array();
  for (const auto& entry : report.coverage.entries) {
    json e = simple_to_json(entry.line);
    e["covered"] = entry.covered();
    e["certificate"] = entry.certificate ? wedge_to_json(*entry.certificate) : json(nullptr);
    coverage.push_back(std::move(e));
  }
  json doc = {{"n", report.n},
              {"lines", {{"count", report.line_count}, {"size_histogram", histogram}}},
              {"simple_lines", simple},
              {"max_line_size", report.max_line_size},
              {"three_bounded", report.three_bounded},
              {"wedges", wedges},
              {"coverage", coverage}};
  return doc.dump(indent);
}

AnalysisReport report_from_json(const std::string& text) {
  try {
    json doc = json::parse(text);
    AnalysisReport report;
    report.n = doc.at("n").get<std::size_t>();
    report.line_count = doc.at("lines").at("count").get<std::size_t>();
    for (const auto& [size, count] : doc.at("lines").at("size_histogram").items()) {
      report.line_size_histogram[std::stoul(size)] = count.get<std::size_t>();
    }
    report.max_line_size = doc.at("max_line_size").get<std::size_t>();
    report.three_bounded = doc.at("three_bounded").get<bool>();
    for (const auto& s : doc.at("simple_lines")) report.simple_lines.push_back(simple_from_json(s));
    for (const auto& w : doc.at("wedges")) report.wedges.push_back(wedge_from_json(w));
    for (const auto& e : doc.at("coverage")) {
      CoverageEntry entry{simple_from_json(e), std::nullopt};
      if (!e.at("certificate").is_null()) entry.certificate = wedge_from_json(e.at("certificate"));
      if (entry.covered() != e.at("covered").get<bool>()) {
        throw ParseError(0, "coverage flag disagrees with certificate");
      }
      report.coverage.entries.push_back(std::move(entry));
    }
    return report;
  } catch (const json::exception& e) {
    throw ParseError(0, e.what());
  } catch (const std::logic_error& e) {
    throw ParseError(0, e.what());
  }
}

std::string report_to_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "points: " << report.n << '\n';
  out << "spanned lines: " << report.line_count << '\n';
  for (const auto& [size, count] : report.line_size_histogram) {
    out << "  size " << size << ": " << count << '\n';
  }
  out << "max line size: " << report.max_line_size << '\n';
  out << "3-bounded: " << (report.three_bounded ? "yes" : "no") << '\n';
  out << "simple lines: " << report.simple_lines.size() << '\n';
  for (const auto& line : report.simple_lines) {
    out << "  " << line.key << " through " << line.endpoints.first << ", "
        << line.endpoints.second << '\n';
  }
  out << "simple wedges: " << report.wedges.size() << '\n';
  for (const auto& w : report.wedges) {
    out << "  apex " << w.apex << " arms " << w.arm1 << ", " << w.arm2 << '\n';
  }
  std::size_t covered = 0;
  for (const auto& entry : report.coverage.entries) covered += entry.covered() ? 1 : 0;
  out << "coverage: " << covered << " of " << report.coverage.entries.size()
      << " simple lines start a wedge\n";
  for (const auto& entry : report.coverage.entries) {
    if (!entry.covered()) out << "  uncovered " << entry.line.key << '\n';
  }
  return out.str();
}

}  // namespace swedge
