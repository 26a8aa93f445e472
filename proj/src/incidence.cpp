#include "simplewedge/incidence.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "simplewedge/errors.hpp"

namespace swedge {

IncidenceStructure IncidenceStructure::build(std::span<const Point> points) {
  IncidenceStructure s;
  s.n_ = points.size();
  if (s.n_ > std::numeric_limits<std::uint32_t>::max() / 2) {
    throw std::length_error("configuration too large");
  }

  std::map<LineKey, std::vector<std::size_t>> by_key;
  for (std::size_t i = 0; i < s.n_; ++i) {
    for (std::size_t j = i + 1; j < s.n_; ++j) {
      auto& members = by_key[line_through(points[i], points[j])];
      members.push_back(i);
      members.push_back(j);
    }
  }

  s.lines_.reserve(by_key.size());
  s.pair_line_.assign(s.n_ * s.n_, std::numeric_limits<std::uint32_t>::max());
  for (auto& [key, members] : by_key) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const auto index = static_cast<std::uint32_t>(s.lines_.size());
    for (std::size_t u = 0; u < members.size(); ++u) {
      for (std::size_t v = u + 1; v < members.size(); ++v) {
        s.pair_line_[members[u] * s.n_ + members[v]] = index;
        s.pair_line_[members[v] * s.n_ + members[u]] = index;
      }
    }
    s.max_line_size_ = std::max(s.max_line_size_, members.size());
    s.lines_.push_back(SpannedLine{key, std::move(members)});
  }
  return s;
}

std::size_t IncidenceStructure::line_index(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_ || i == j) {
    throw std::out_of_range("no line for index pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
  }
  return pair_line_[i * n_ + j];
}

std::optional<std::size_t> IncidenceStructure::find(const LineKey& key) const {
  auto it = std::lower_bound(lines_.begin(), lines_.end(), key,
                             [](const SpannedLine& line, const LineKey& k) { return line.key < k; });
  if (it == lines_.end() || it->key != key) return std::nullopt;
  return static_cast<std::size_t>(it - lines_.begin());
}

bool IncidenceStructure::collinear(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j || i == k || j == k) return true;
  return line_index(i, j) == line_index(i, k);
}

Configuration build_configuration(std::vector<Point> points) {
  if (points.size() < 3) throw ConfigurationError("too few points");

  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    if (auto c = points[l] <=> points[r]; c != 0) return c < 0;
    return l < r;
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points[order[k - 1]] == points[order[k]]) {
      throw ConfigurationError("duplicate point at indices (" + std::to_string(order[k - 1]) +
                               "," + std::to_string(order[k]) + ")");
    }
  }

  bool all_collinear = true;
  for (std::size_t k = 2; k < points.size() && all_collinear; ++k) {
    all_collinear = collinear(points[0], points[1], points[k]);
  }
  if (all_collinear) throw ConfigurationError("contained in a line");

  Configuration config;
  config.incidence_ = std::make_shared<const IncidenceStructure>(IncidenceStructure::build(points));
  config.points_ = std::move(points);
  return config;
}

const IncidenceStructure& spanned_lines(const Configuration& config) { return config.incidence(); }

std::vector<SimpleLine> simple_lines(const Configuration& config) {
  std::vector<SimpleLine> out;
  for (const auto& line : config.incidence().lines()) {
    if (line.points.size() == 2) out.push_back(SimpleLine{line.key, {line.points[0], line.points[1]}});
  }
  // Gallai-Sylvester: every interesting set spans an ordinary line.
  if (out.empty()) throw LemmaViolation("interesting set without a simple line");
  return out;
}

bool is_ell_bounded(const Configuration& config, std::size_t ell) {
  if (ell < 2) throw std::invalid_argument("ell must be at least 2");
  return config.incidence().max_line_size() <= ell;
}

std::optional<std::size_t> third_point(const Configuration& config, std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("third_point needs two distinct indices");
  const auto& members = config.incidence().line_of(i, j).points;
  if (members.size() > 3) throw NotThreeBounded("not 3-bounded on this line");
  if (members.size() == 2) return std::nullopt;
  for (std::size_t k : members) {
    if (k != i && k != j) return k;
  }
  return std::nullopt;  // unreachable: three distinct members
}

bool is_simple(const Configuration& config, std::size_t i, std::size_t j) {
  return config.incidence().line_of(i, j).points.size() == 2;
}

}  // namespace swedge
