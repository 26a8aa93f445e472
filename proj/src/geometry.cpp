#include "simplewedge/geometry.hpp"

#include <ostream>

#include <boost/multiprecision/integer.hpp>

#include "simplewedge/errors.hpp"

namespace swedge {
namespace {

using boost::multiprecision::gcd;

BigInt lcm(const BigInt& x, const BigInt& y) { return x / gcd(x, y) * y; }

// Scales a rational coefficient to an integer given a common multiple of
// all denominators.
BigInt scaled(const Rational& r, const BigInt& multiple) {
  return r.numerator() * (multiple / r.denominator());
}

}  // namespace

std::string to_string(const Point& p) {
  return "(" + p.x.to_string() + ", " + p.y.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << to_string(p); }

LineKey::LineKey(BigInt a, BigInt b, BigInt c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.is_zero() && b_.is_zero()) throw GeometryError("line key with a = b = 0");
  BigInt g = gcd(gcd(abs(a_), abs(b_)), abs(c_));
  if (g != 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
  const BigInt& lead = a_.is_zero() ? b_ : a_;
  if (lead.sign() < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
}

std::string LineKey::to_string() const {
  return "(" + a_.str() + "," + b_.str() + "," + c_.str() + ")";
}

std::strong_ordering operator<=>(const LineKey& lhs, const LineKey& rhs) {
  int c = compare(lhs.a_, rhs.a_);
  if (c == 0) c = compare(lhs.b_, rhs.b_);
  if (c == 0) c = compare(lhs.c_, rhs.c_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const LineKey& key) { return os << key.to_string(); }

LineKey line_through(const Point& p, const Point& q) {
  if (p == q) throw GeometryError("degenerate pair");
  // a*x + b*y + c = 0 with a = qy - py, b = px - qx, c = qx*py - px*qy.
  Rational a = q.y - p.y;
  Rational b = p.x - q.x;
  Rational c = q.x * p.y - p.x * q.y;
  BigInt m = lcm(lcm(a.denominator(), b.denominator()), c.denominator());
  return LineKey(scaled(a, m), scaled(b, m), scaled(c, m));
}

bool collinear(const Point& p, const Point& q, const Point& r) {
  Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return det.is_zero();
}

bool on_line(const Point& p, const LineKey& line) {
  // Multiply a*x + b*y + c through by den(x)*den(y).
  const BigInt& xd = p.x.denominator();
  const BigInt& yd = p.y.denominator();
  BigInt value = line.a() * p.x.numerator() * yd + line.b() * p.y.numerator() * xd +
                 line.c() * xd * yd;
  return value.is_zero();
}

std::optional<Point> intersect(const LineKey& line1, const LineKey& line2) {
  if (line1 == line2) throw GeometryError("coincident lines");
  BigInt det = line1.a() * line2.b() - line2.a() * line1.b();
  if (det.is_zero()) return std::nullopt;
  BigInt xn = line1.b() * line2.c() - line2.b() * line1.c();
  BigInt yn = line1.c() * line2.a() - line2.c() * line1.a();
  return Point{Rational(std::move(xn), det), Rational(std::move(yn), det)};
}

}  // namespace swedge
