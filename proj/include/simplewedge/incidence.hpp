#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "simplewedge/geometry.hpp"

namespace swedge {

/// A line spanned by the configuration together with the indices of every
/// configuration point on it (strictly increasing, at least two).
struct SpannedLine {
  LineKey key;
  std::vector<std::size_t> points;
};

/// All spanned lines of a point set, sorted by LineKey, plus an O(1)
/// lookup from an unordered index pair to the line it spans.
class IncidenceStructure {
 public:
  static IncidenceStructure build(std::span<const Point> points);

  const std::vector<SpannedLine>& lines() const noexcept { return lines_; }
  std::size_t point_count() const noexcept { return n_; }

  /// Position in lines() of the line through points i and j (i != j).
  std::size_t line_index(std::size_t i, std::size_t j) const;
  const SpannedLine& line_of(std::size_t i, std::size_t j) const {
    return lines_[line_index(i, j)];
  }
  std::optional<std::size_t> find(const LineKey& key) const;

  /// Index-level collinearity.  Repeated indices count as collinear.
  bool collinear(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t max_line_size() const noexcept { return max_line_size_; }

 private:
  std::size_t n_ = 0;
  std::size_t max_line_size_ = 0;
  std::vector<SpannedLine> lines_;
  std::vector<std::uint32_t> pair_line_;  // n_ * n_, row-major
};

/// An interesting set: at least three pairwise distinct points, not all on
/// one line.  Immutable; the incidence structure is computed once at
/// construction and shared between copies.
class Configuration {
 public:
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& point(std::size_t i) const { return points_.at(i); }
  const IncidenceStructure& incidence() const noexcept { return *incidence_; }

  friend bool operator==(const Configuration& lhs, const Configuration& rhs) {
    return lhs.points_ == rhs.points_;
  }

 private:
  friend Configuration build_configuration(std::vector<Point> points);
  Configuration() = default;

  std::vector<Point> points_;
  std::shared_ptr<const IncidenceStructure> incidence_;
};

struct SimpleLine {
  LineKey key;
  std::pair<std::size_t, std::size_t> endpoints;  // first < second

  friend bool operator==(const SimpleLine&, const SimpleLine&) = default;
};

/// Validates and wraps a point sequence, preserving order.  Throws
/// ConfigurationError with "too few points", "duplicate point at indices
/// (i,j)" or "contained in a line".
Configuration build_configuration(std::vector<Point> points);

const IncidenceStructure& spanned_lines(const Configuration& config);

/// Lines with exactly two incident points, sorted by key.  Never empty for
/// a valid configuration; an empty result throws LemmaViolation.
std::vector<SimpleLine> simple_lines(const Configuration& config);

/// Throws std::invalid_argument when ell < 2.
bool is_ell_bounded(const Configuration& config, std::size_t ell);

/// The unique other point on the line through i and j, or nullopt if that
/// line is simple.  Throws NotThreeBounded ("not 3-bounded on this line")
/// when the line holds four or more points, std::invalid_argument if i == j.
std::optional<std::size_t> third_point(const Configuration& config, std::size_t i,
                                       std::size_t j);

bool is_simple(const Configuration& config, std::size_t i, std::size_t j);

}  // namespace swedge
