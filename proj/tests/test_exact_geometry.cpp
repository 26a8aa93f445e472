#include <doctest.h>

#include <random>

#include "simplewedge/errors.hpp"
#include "simplewedge/geometry.hpp"
#include "support/oracle.hpp"

using namespace swedge;

namespace {

Rational q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }
Point pt(Rational x, Rational y) { return Point{std::move(x), std::move(y)}; }
LineKey key(long long a, long long b, long long c) { return LineKey(a, b, c); }

struct RandomRationals {
  std::mt19937_64 rng;
  explicit RandomRationals(std::uint64_t seed) : rng(seed) {}

  Rational next() {
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 12);
    return q(num(rng), den(rng));
  }
  Point point() { return pt(next(), next()); }
};

}  // namespace

TEST_CASE("rational canonical form") {
  Rational r(BigInt(6), BigInt(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(q(0, -7).denominator() == 1);
  CHECK(q(2, 4) == q(1, 2));
  CHECK(q(-1, 3) < q(0));
  CHECK(q(4, 3) > q(1));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational arithmetic") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(q(1, 2) - q(1, 3) == q(1, 6));
  CHECK(q(-2, 3) * q(3, 4) == q(-1, 2));
  CHECK(q(4, 3) / q(-2, 3) == q(-2));
  CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
}

TEST_CASE("rational text syntax") {
  CHECK(Rational::parse("-2") == q(-2));
  CHECK(Rational::parse("4/3") == q(4, 3));
  CHECK(Rational::parse("-2/3") == q(-2, 3));
  CHECK(Rational::parse("6/4").to_string() == "3/2");
  CHECK(Rational::parse("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  for (const char* bad : {"", "-", "x", "1/", "/2", "1/0", "1/-2", "--1", "+1", "1.5", "1 /2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  }
  CHECK(q(-2, 3).to_string() == "-2/3");
  CHECK(q(5).to_string() == "5");
}

TEST_CASE("line_through examples") {
  CHECK(line_through(pt(-2, 0), pt(2, 0)) == key(0, 1, 0));
  CHECK(line_through(pt(0, 4), pt(0, q(4, 3))) == key(1, 0, 0));
  // 2x + 3y - 4 = 0 holds at (2,0), (-1,2) and at (0,4/3).
  CHECK(2 * 2 + 3 * 0 - 4 == 0);
  CHECK(2 * -1 + 3 * 2 - 4 == 0);
  LineKey l = line_through(pt(2, 0), pt(-1, 2));
  CHECK(l == key(2, 3, -4));
  CHECK(on_line(pt(0, q(4, 3)), l));
  CHECK(line_through(pt(-1, 2), pt(1, 2)) == key(0, 1, -2));
}

TEST_CASE("line_through rejects identical points") {
  CHECK_THROWS_WITH_AS(line_through(pt(q(1, 2), 3), pt(q(2, 4), 3)), "degenerate pair",
                       GeometryError);
}

TEST_CASE("line key canonicalization") {
  CHECK(key(0, -4, 0) == key(0, 1, 0));
  CHECK(key(-6, 9, 12) == key(2, -3, -4));
}

TEST_CASE("line key needs a direction") {
  CHECK_THROWS_AS(LineKey(0, 0, 5), GeometryError);
}

TEST_CASE("collinear examples") {
  CHECK(collinear(pt(-2, 0), pt(2, 0), pt(0, 0)));
  CHECK(collinear(pt(-2, 0), pt(-1, 2), pt(0, 4)));
  CHECK_FALSE(collinear(pt(-2, 0), pt(2, 0), pt(0, q(4, 3))));
  CHECK(collinear(pt(1, 1), pt(1, 1), pt(5, 7)));
}

TEST_CASE("on_line examples") {
  CHECK(on_line(pt(0, q(4, 3)), key(2, 3, -4)));
  CHECK(on_line(pt(2, 0), key(0, 1, 0)));
  CHECK_FALSE(on_line(pt(0, 4), key(0, 1, 0)));
}

TEST_CASE("intersect examples") {
  auto p = intersect(key(2, -3, 4), key(2, 3, -4));
  REQUIRE(p);
  CHECK(*p == pt(0, q(4, 3)));
  CHECK_FALSE(intersect(key(0, 1, 0), key(0, 1, -2)));
  auto origin = intersect(key(1, 0, 0), key(0, 1, 0));
  REQUIRE(origin);
  CHECK(*origin == pt(0, 0));
  CHECK_THROWS_WITH_AS(intersect(key(1, 1, 1), key(2, 2, 2)), "coincident lines", GeometryError);
}

TEST_CASE("line_through is symmetric and passes through both points") {
  RandomRationals gen(11);
  for (int i = 0; i < 500; ++i) {
    Point p = gen.point(), r = gen.point();
    if (p == r) continue;
    LineKey l = line_through(p, r);
    CHECK(l == line_through(r, p));
    CHECK(on_line(p, l));
    CHECK(on_line(r, l));
  }
}

TEST_CASE("collinear matches on_line of the spanned line") {
  RandomRationals gen(12);
  std::mt19937_64 pick(3);
  for (int i = 0; i < 500; ++i) {
    Point p = gen.point(), r = gen.point();
    if (p == r) continue;
    // Half of the third points are forced onto the line.
    Point s = pick() % 2 ? gen.point() : [&] {
      Rational t = gen.next();
      return pt(p.x + t * (r.x - p.x), p.y + t * (r.y - p.y));
    }();
    const bool expected = on_line(s, line_through(p, r));
    CHECK(collinear(p, r, s) == expected);
    // Invariant under argument permutation.
    CHECK(collinear(s, p, r) == expected);
    CHECK(collinear(r, s, p) == expected);
    CHECK(collinear(p, s, r) == expected);
  }
}

TEST_CASE("intersection lies on both lines") {
  RandomRationals gen(13);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    LineKey l1 = [&] {
      for (;;) {
        Point a = gen.point(), b = gen.point();
        if (a != b) return line_through(a, b);
      }
    }();
    LineKey l2 = [&] {
      for (;;) {
        Point a = gen.point(), b = gen.point();
        if (a != b) return line_through(a, b);
      }
    }();
    if (l1 == l2) continue;
    auto p = intersect(l1, l2);
    if (!p) continue;
    ++checked;
    CHECK(on_line(*p, l1));
    CHECK(on_line(*p, l2));
  }
  CHECK(checked > 400);
}

TEST_CASE("canonicalization is idempotent under integer multiples") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long long> coef(-30, 30);
  std::uniform_int_distribution<long long> mult(-9, 9);
  for (int i = 0; i < 500; ++i) {
    long long a = coef(rng), b = coef(rng), c = coef(rng);
    if (a == 0 && b == 0) continue;
    long long m = mult(rng);
    if (m == 0) continue;
    LineKey base(a, b, c);
    CHECK(LineKey(BigInt(a) * m, BigInt(b) * m, BigInt(c) * m) == base);
    CHECK(LineKey(base.a(), base.b(), base.c()) == base);
  }
}

TEST_CASE("collinear agrees with an unreduced big-integer determinant") {
  RandomRationals gen(15);
  std::mt19937_64 pick(16);
  int collinear_hits = 0;
  for (int i = 0; i < 1000; ++i) {
    Point p = gen.point(), r = gen.point();
    Point s = pick() % 3 ? gen.point() : [&] {
      Rational t = gen.next();
      return pt(p.x + t * (r.x - p.x), p.y + t * (r.y - p.y));
    }();
    const bool expected = oracle::unreduced_det(p, r, s).is_zero();
    collinear_hits += expected ? 1 : 0;
    CHECK(collinear(p, r, s) == expected);
  }
  CHECK(collinear_hits > 200);
}
