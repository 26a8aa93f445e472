#include "simplewedge/io.hpp"

#include <fstream>
#include <sstream>

#include "simplewedge/errors.hpp"

namespace swedge {

std::vector<Point> parse_points(std::istream& in) {
  std::vector<Point> points;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(std::move(tok));
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 2 fields, got " + std::to_string(tokens.size()));
    }
    try {
      points.push_back(Point{Rational::parse(tokens[0]), Rational::parse(tokens[1])});
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return points;
}

std::vector<Point> parse_points(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_points(in);
}

std::string write_points(std::span<const Point> points) {
  std::string out;
  for (const auto& p : points) {
    out += p.x.to_string();
    out += ' ';
    out += p.y.to_string();
    out += '\n';
  }
  return out;
}

std::vector<Point> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return parse_points(in);
}

}  // namespace swedge
