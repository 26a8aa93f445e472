#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

#include "simplewedge/rational.hpp"

namespace swedge {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& lhs, const Point& rhs) {
    if (auto c = lhs.x <=> rhs.x; c != 0) return c;
    return lhs.y <=> rhs.y;
  }
};

std::string to_string(const Point& p);
std::ostream& operator<<(std::ostream& os, const Point& p);

/// Integer homogeneous line a*x + b*y + c = 0.
///
/// Always canonical: (a, b) != (0, 0), gcd(|a|, |b|, |c|) = 1 and the first
/// nonzero of (a, b) is positive.  Two keys denote the same line iff they
/// compare equal, which makes LineKey usable directly as a map key.
class LineKey {
 public:
  /// Canonicalizes any nonzero multiple of a line's coefficients.
  /// Throws GeometryError when a = b = 0.
  LineKey(BigInt a, BigInt b, BigInt c);

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  const BigInt& c() const noexcept { return c_; }

  std::string to_string() const;

  friend bool operator==(const LineKey&, const LineKey&) = default;
  friend std::strong_ordering operator<=>(const LineKey& lhs, const LineKey& rhs);

 private:
  BigInt a_;
  BigInt b_;
  BigInt c_;
};

std::ostream& operator<<(std::ostream& os, const LineKey& key);

/// Canonical key of the line through p and q.  Throws GeometryError
/// ("degenerate pair") when p == q.
LineKey line_through(const Point& p, const Point& q);

/// Exact test of (q - p) x (r - p) == 0.  Duplicated points count as
/// collinear.
bool collinear(const Point& p, const Point& q, const Point& r);

bool on_line(const Point& p, const LineKey& line);

/// Common point of two distinct lines, or nullopt when they are parallel.
/// Throws GeometryError ("coincident lines") when line1 == line2.
std::optional<Point> intersect(const LineKey& line1, const LineKey& line2);

}  // namespace swedge
