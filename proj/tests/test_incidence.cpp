#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "simplewedge/constructions.hpp"
#include "simplewedge/errors.hpp"
#include "simplewedge/incidence.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace swedge;
using corpus::ipt;

namespace {

std::vector<std::vector<std::size_t>> line_sets(const Configuration& config) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& line : config.incidence().lines()) out.push_back(line.points);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

Configuration triangle() { return build_configuration({ipt(0, 0), ipt(1, 0), ipt(0, 1)}); }

}  // namespace

TEST_CASE("build_configuration accepts the six-point set in order") {
  std::vector<Point> pts{ipt(-2, 0), ipt(2, 0), ipt(-1, 2), ipt(1, 2), ipt(0, 4),
                         Point{0, Rational(BigInt(4), BigInt(3))}};
  Configuration c = build_configuration(pts);
  CHECK(c.size() == 6);
  CHECK(c.points() == pts);
}

TEST_CASE("build_configuration errors") {
  CHECK_THROWS_WITH_AS(build_configuration({ipt(0, 0), ipt(1, 1)}), "too few points",
                       ConfigurationError);
  CHECK_THROWS_WITH_AS(build_configuration({ipt(0, 0), ipt(1, 1), ipt(2, 2)}),
                       "contained in a line", ConfigurationError);
  CHECK_THROWS_WITH_AS(build_configuration({ipt(0, 0), ipt(1, 0), ipt(0, 0)}),
                       "duplicate point at indices (0,2)", ConfigurationError);
}

TEST_CASE("spanned lines of the six-point set") {
  Configuration c = six_point();
  const auto& inc = spanned_lines(c);
  CHECK(inc.lines().size() == 7);
  std::size_t twos = 0, threes = 0;
  for (const auto& line : inc.lines()) {
    twos += line.points.size() == 2;
    threes += line.points.size() == 3;
  }
  CHECK(twos == 3);
  CHECK(threes == 4);
  CHECK(line_sets(c) == oracle::brute_lines(c.points()));
}

TEST_CASE("spanned lines of a triangle") {
  Configuration c = triangle();
  CHECK(c.incidence().lines().size() == 3);
  for (const auto& line : c.incidence().lines()) CHECK(line.points.size() == 2);
}

TEST_CASE("nine-point set has a four-point line") {
  Configuration w = nine_point();
  const std::vector<std::size_t> expected{0, 2, 4, 6};  // a, x1, x3, g1
  auto lines = oracle::brute_lines(w.points());
  CHECK(std::find(lines.begin(), lines.end(), expected) != lines.end());
  CHECK(w.incidence().line_of(0, 2).points == expected);
  CHECK(line_sets(w) == lines);
}

TEST_CASE("spanned lines are sorted by key") {
  Configuration w = nine_point();
  const auto& lines = w.incidence().lines();
  for (std::size_t i = 1; i < lines.size(); ++i) CHECK(lines[i - 1].key < lines[i].key);
}

TEST_CASE("simple lines of the paper fixtures") {
  auto six = simple_lines(six_point());
  REQUIRE(six.size() == 3);
  // L_{x1,x2} is y = 2, L_{a,b} is y = 0, L_{x3,y} is x = 0; sorted by key.
  CHECK(six[0] == SimpleLine{LineKey(0, 1, -2), {2, 3}});
  CHECK(six[1] == SimpleLine{LineKey(0, 1, 0), {0, 1}});
  CHECK(six[2] == SimpleLine{LineKey(1, 0, 0), {4, 5}});

  CHECK(simple_lines(triangle()).size() == 3);

  auto w = simple_lines(nine_point());
  CHECK(std::find(w.begin(), w.end(), SimpleLine{LineKey(0, 1, 0), {0, 1}}) != w.end());
}

TEST_CASE("ell-boundedness") {
  CHECK(is_ell_bounded(six_point(), 3));
  CHECK_FALSE(is_ell_bounded(nine_point(), 3));
  CHECK(is_ell_bounded(nine_point(), 4));
  CHECK_THROWS_AS(is_ell_bounded(six_point(), 1), std::invalid_argument);
}

TEST_CASE("third_point") {
  Configuration six = six_point();
  CHECK(third_point(six, 1, 2) == std::optional<std::size_t>(5));
  CHECK(third_point(six, 2, 1) == std::optional<std::size_t>(5));
  CHECK_FALSE(third_point(six, 0, 1));
  CHECK_THROWS_WITH_AS(third_point(nine_point(), 0, 2), "not 3-bounded on this line",
                       NotThreeBounded);
  CHECK_THROWS_AS(third_point(six, 3, 3), std::invalid_argument);
}

TEST_CASE("incidence properties over random configurations") {
  auto configs = corpus::random_configs(150, 99, 3, 14, 6, false);
  auto bounded = corpus::random_configs(150, 98, 3, 14, 50, true);
  configs.insert(configs.end(), bounded.begin(), bounded.end());
  std::mt19937_64 rng(5);
  for (const auto& c : configs) {
    const auto& inc = c.incidence();
    const std::size_t n = c.size();

    // Pair coverage.
    std::size_t pairs = 0;
    for (const auto& line : inc.lines()) pairs += choose2(line.points.size());
    CHECK(pairs == choose2(n));

    // Structure matches the brute-force oracle.
    CHECK(line_sets(c) == oracle::brute_lines(c.points()));

    // Every listed point lies on the key; every pair maps to its line.
    for (const auto& line : inc.lines()) {
      CHECK(std::is_sorted(line.points.begin(), line.points.end()));
      for (std::size_t i = 0; i < n; ++i) {
        bool listed = std::binary_search(line.points.begin(), line.points.end(), i);
        CHECK(on_line(c.point(i), line.key) == listed);
      }
    }

    // Empirical Gallai-Sylvester.
    CHECK_FALSE(simple_lines(c).empty());

    // Monotone boundedness.
    for (std::size_t ell = 2; ell < n; ++ell) {
      if (is_ell_bounded(c, ell)) CHECK(is_ell_bounded(c, ell + 1));
    }

    // third_point symmetry on 3-bounded sets.
    if (is_ell_bounded(c, 3)) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) CHECK(third_point(c, i, j) == third_point(c, j, i));
      }
    }

    // Independent of input order up to the index permutation.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Point> shuffled(n);
    for (std::size_t i = 0; i < n; ++i) shuffled[perm[i]] = c.point(i);
    Configuration d = build_configuration(shuffled);
    REQUIRE(d.incidence().lines().size() == inc.lines().size());
    for (std::size_t l = 0; l < inc.lines().size(); ++l) {
      const auto& mine = inc.lines()[l];
      const auto& theirs = d.incidence().lines()[l];
      CHECK(mine.key == theirs.key);
      std::vector<std::size_t> mapped;
      for (std::size_t i : mine.points) mapped.push_back(perm[i]);
      std::sort(mapped.begin(), mapped.end());
      CHECK(mapped == theirs.points);
    }
  }
}
