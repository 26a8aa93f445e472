#include "simplewedge/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "simplewedge/errors.hpp"
#include "simplewedge/orbit.hpp"
#include "simplewedge/wedge.hpp"

namespace swedge {
namespace {

constexpr std::size_t kRetryBudget = 64;

Point pt(Rational x, Rational y) { return Point{std::move(x), std::move(y)}; }

Rational frac(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

std::vector<Point> six_point_coordinates() {
  return {pt(-2, 0), pt(2, 0), pt(-1, 2), pt(1, 2), pt(0, 4), pt(0, frac(4, 3))};
}

// Line through (px, 0) with the given slope: slope*x - y - slope*px = 0.
LineKey pencil_line(long long px, const Rational& slope) {
  Point base = pt(px, 0);
  Point other = pt(px + 1, slope);
  return line_through(base, other);
}

bool closed_orbit_valid(const std::vector<Point>& points, std::size_t k) {
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

  Configuration config = build_configuration(points);
  if (!is_ell_bounded(config, 3) || !is_simple(config, 0, 1)) return false;
  Orbit orbit = maximal_orbit(config, make_base_line(config, 0, 1), 2);
  return orbit.kind == OrbitKind::Closed && orbit_length(orbit) == 2 * k;
}

bool no_wedge_through_base(const Configuration& config) {
  if (!is_simple(config, 0, 1)) return false;
  for (std::size_t c = 2; c < config.size(); ++c) {
    if (is_simple(config, 0, c) || is_simple(config, 1, c)) return false;
  }
  return true;
}

}  // namespace

Configuration six_point() { return build_configuration(six_point_coordinates()); }

Configuration nine_point() {
  auto points = six_point_coordinates();
  points.push_back(pt(frac(-2, 3), frac(8, 3)));
  points.push_back(pt(frac(2, 3), frac(8, 3)));
  points.push_back(pt(0, 2));
  return build_configuration(std::move(points));
}

Configuration closed_orbit_config(std::size_t k) {
  if (k < 2) throw std::invalid_argument("closed_orbit_config needs k >= 2");
  const auto kk = static_cast<long long>(k);
  for (std::size_t attempt = 0; attempt < kRetryBudget; ++attempt) {
    const auto r = static_cast<long long>(attempt);
    // Positive slopes through a, negative through b: every intersection
    // lies strictly above the x-axis, so L_{a,b} stays simple.
    std::vector<LineKey> through_a;
    std::vector<LineKey> through_b;
    for (long long m = 1; m <= kk; ++m) {
      through_a.push_back(pencil_line(-1, frac(m + 1 + r, 2 * m + 7 + 3 * r)));
      through_b.push_back(pencil_line(1, frac(-(3 * m + 2 + r), m + 4 + 2 * r)));
    }
    std::vector<Point> points{pt(-1, 0), pt(1, 0)};
    for (std::size_t m = 1; m <= k; ++m) {
      const LineKey& prev_a = through_a[(m + k - 2) % k];  // A_{m-1}, A_0 = A_k
      const LineKey& cur_a = through_a[m - 1];
      const LineKey& cur_b = through_b[m - 1];
      points.push_back(*intersect(prev_a, cur_b));
      points.push_back(*intersect(cur_a, cur_b));
    }
    try {
      if (closed_orbit_valid(points, k)) return build_configuration(std::move(points));
    } catch (const NotThreeBounded&) {
    } catch (const OrbitAnomaly&) {
    } catch (const ConfigurationError&) {
    }
  }
  throw ConstructionError("construction failed for k = " + std::to_string(k));
}

Configuration g_extended(std::size_t m) {
  if (m == 0 || m % 2 == 0) {
    throw std::invalid_argument("g_extended needs odd m >= 1 (6 + 3m must be odd)");
  }
  Configuration base = nine_point();
  std::vector<Point> points = base.points();
  const Point a = points[0];
  const Point b = points[1];

  long long denom = 2;
  for (std::size_t triple = 2; triple <= m; ++triple) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < kRetryBudget && !placed; ++attempt, ++denom) {
      // g1' on the line through a and x1 (y = 2x + 4), g2' its mirror image.
      Rational s = frac(-1, denom);
      Point g1 = pt(s, Rational(2) * (s + Rational(2)));
      Point g2 = pt(-g1.x, g1.y);
      auto g3 = intersect(line_through(a, g2), line_through(b, g1));
      if (!g3) continue;
      std::vector<Point> candidate = points;
      candidate.push_back(g1);
      candidate.push_back(g2);
      candidate.push_back(*g3);
      try {
        if (no_wedge_through_base(build_configuration(candidate))) {
          points = std::move(candidate);
          placed = true;
        }
      } catch (const ConfigurationError&) {
      }
    }
    if (!placed) throw ConstructionError("construction failed for m = " + std::to_string(m));
  }

  Configuration config = build_configuration(std::move(points));
  CoverageReport coverage = wedge_coverage(config);
  const LineKey base_key = config.incidence().line_of(0, 1).key;
  for (const auto& entry : coverage.entries) {
    if (entry.line.key == base_key && entry.covered()) {
      throw ConstructionError("construction failed: base line covered for m = " +
                              std::to_string(m));
    }
  }
  return config;
}

Configuration generate(const ConstructionSpec& spec) {
  switch (spec.kind) {
    case ConstructionKind::SixPoint:
      return six_point();
    case ConstructionKind::NinePoint:
      return nine_point();
    case ConstructionKind::ClosedOrbit:
      return closed_orbit_config(spec.parameter);
    case ConstructionKind::GExtended:
      return g_extended(spec.parameter);
  }
  throw std::invalid_argument("unknown construction kind");
}

}  // namespace swedge
