#include <doctest.h>

#include "simplewedge/constructions.hpp"
#include "simplewedge/errors.hpp"
#include "simplewedge/orbit.hpp"
#include "simplewedge/wedge.hpp"
#include "support/oracle.hpp"

using namespace swedge;

namespace {

Rational q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }
Point pt(Rational x, Rational y) { return Point{std::move(x), std::move(y)}; }

bool base_line_uncovered(const Configuration& c) {
  for (const auto& e : wedge_coverage(c).entries) {
    if (e.line.key == LineKey(0, 1, 0)) return !e.covered();
  }
  FAIL("L_ab missing from coverage");
  return false;
}

}  // namespace

TEST_CASE("six_point coordinates") {
  Configuration c = six_point();
  CHECK(c.points() == std::vector<Point>{pt(-2, 0), pt(2, 0), pt(-1, 2), pt(1, 2), pt(0, 4),
                                         pt(0, q(4, 3))});
  CHECK(c.size() == 6);
  CHECK(simple_lines(c).size() == 3);
  CHECK(is_ell_bounded(c, 3));
}

TEST_CASE("nine_point coordinates") {
  Configuration w = nine_point();
  REQUIRE(w.size() == 9);
  const auto& p = w.points();
  CHECK(std::vector<Point>(p.begin(), p.begin() + 6) == six_point().points());
  CHECK(p[6] == pt(q(-2, 3), q(8, 3)));
  CHECK(p[7] == pt(q(2, 3), q(8, 3)));
  CHECK(p[8] == pt(0, 2));
  auto g3 = intersect(line_through(p[0], p[7]), line_through(p[1], p[6]));
  REQUIRE(g3);
  CHECK(*g3 == pt(0, 2));
  CHECK_FALSE(is_ell_bounded(w, 3));
}

TEST_CASE("closed_orbit_config examples") {
  Configuration k2 = closed_orbit_config(2);
  CHECK(k2.size() == 6);
  Orbit o2 = maximal_orbit(k2, make_base_line(k2, 0, 1), 2);
  CHECK(o2.kind == OrbitKind::Closed);
  CHECK(orbit_length(o2) == 4);

  Configuration k3 = closed_orbit_config(3);
  CHECK(k3.size() == 8);
  Orbit o3 = maximal_orbit(k3, make_base_line(k3, 0, 1), 2);
  CHECK(o3.kind == OrbitKind::Closed);
  CHECK(orbit_length(o3) == 6);
  CHECK_FALSE(find_wedge_from_line(k3, make_base_line(k3, 0, 1)));

  Configuration k4 = closed_orbit_config(4);
  CHECK(k4.size() == 10);
  CHECK_FALSE(brute_force_wedges(k4).empty());

  CHECK_THROWS_AS(closed_orbit_config(1), std::invalid_argument);
  CHECK_THROWS_AS(closed_orbit_config(0), std::invalid_argument);
}

TEST_CASE("closed_orbit_config invariants for k up to 16") {
  for (std::size_t k = 2; k <= 16; ++k) {
    CAPTURE(k);
    Configuration c = closed_orbit_config(k);
    CHECK(c.size() == 2 * k + 2);
    CHECK(c.point(0) == pt(-1, 0));
    CHECK(c.point(1) == pt(1, 0));
    CHECK(is_ell_bounded(c, 3));
    CHECK(oracle::points_on_line(c.points(), 0, 1) == 2);
    Decomposition d = decompose(c, make_base_line(c, 0, 1));
    REQUIRE(d.closed.size() == 1);
    CHECK(orbit_length(d.closed[0]) == 2 * k);
    CHECK_FALSE(d.open);
    CHECK(c == closed_orbit_config(k));
  }
}

TEST_CASE("g_extended") {
  CHECK(g_extended(1) == nine_point());
  CHECK_THROWS_AS(g_extended(2), std::invalid_argument);
  CHECK_THROWS_AS(g_extended(0), std::invalid_argument);

  for (std::size_t m : {3u, 5u, 7u}) {
    CAPTURE(m);
    Configuration c = g_extended(m);
    CHECK(c.size() == 6 + 3 * m);
    CHECK(c.size() % 2 == 1);
    CHECK(oracle::points_on_line(c.points(), 0, 1) == 2);
    for (std::size_t p = 2; p < c.size(); ++p) {
      CHECK(oracle::points_on_line(c.points(), 0, p) >= 3);
      CHECK(oracle::points_on_line(c.points(), 1, p) >= 3);
    }
    CHECK(base_line_uncovered(c));
    CHECK(c == g_extended(m));
  }
}

TEST_CASE("generate dispatches on the spec") {
  CHECK(generate({ConstructionKind::SixPoint}) == six_point());
  CHECK(generate({ConstructionKind::NinePoint}) == nine_point());
  CHECK(generate({ConstructionKind::ClosedOrbit, 3}) == closed_orbit_config(3));
  CHECK(generate({ConstructionKind::GExtended, 3}) == g_extended(3));
  CHECK_THROWS_AS(generate({ConstructionKind::ClosedOrbit, 1}), std::invalid_argument);
}
