#include "degcrit/errors.hpp"
#include "degcrit/pellpoints.hpp"

#include "doctest.h"

#include <array>
#include <vector>

using namespace degcrit;
using namespace degcrit::pell;

TEST_CASE("pell_solutions: frozen orbits and the defining equation") {
  auto sols = pell_solutions(2, 5);
  REQUIRE(sols.size() == 5);
  const std::vector<std::pair<int, int>> expected2 = {
      {1, 0}, {3, 2}, {17, 12}, {99, 70}, {577, 408}};
  for (std::size_t i = 0; i < expected2.size(); ++i) {
    CHECK(sols[i].t == expected2[i].first);
    CHECK(sols[i].v == expected2[i].second);
  }

  sols = pell_solutions(3, 4);
  const std::vector<std::pair<int, int>> expected3 = {{1, 0}, {2, 1}, {7, 4}, {26, 15}};
  for (std::size_t i = 0; i < expected3.size(); ++i) {
    CHECK(sols[i].t == expected3[i].first);
    CHECK(sols[i].v == expected3[i].second);
  }

  // Large fundamental solution found correctly.
  sols = pell_solutions(13, 2);
  CHECK(sols[1].t == 649);
  CHECK(sols[1].v == 180);

  // d = 61 has a famously huge fundamental solution; the continued-fraction
  // search must still find it instantly.
  sols = pell_solutions(61, 2);
  CHECK(sols[1].t == 1766319049);
  CHECK(sols[1].v == 226153980);

  for (const Integer d : {Integer(2), Integer(3), Integer(13), Integer(61)}) {
    for (const auto& [t, v] : pell_solutions(d, 6)) {
      CHECK(t * t - d * v * v == 1);
      CHECK(t >= 1);
      CHECK(v >= 0);
    }
  }

  // Strictly increasing in v.
  sols = pell_solutions(7, 6);
  for (std::size_t i = 1; i < sols.size(); ++i) {
    CHECK(sols[i].v > sols[i - 1].v);
  }

  CHECK(pell_solutions(2, 0).empty());
  CHECK_THROWS_AS(pell_solutions(4, 3), PreconditionError);  // square
  CHECK_THROWS_AS(pell_solutions(1, 3), PreconditionError);
  CHECK_THROWS_AS(pell_solutions(0, 3), PreconditionError);
  CHECK_THROWS_AS(pell_solutions(-2, 3), PreconditionError);
}

TEST_CASE("two-Pell points: frozen first orbit, exact residuals") {
  const auto result = two_pell_points(4);
  REQUIRE(result.points.size() == 4);
  CHECK(result.skipped_rational == 1);  // v = 0 makes u rational

  const std::vector<std::array<long long, 3>> expected = {
      {3, 2, 13}, {17, 12, 433}, {99, 70, 14701}, {577, 408, 499393}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& pt = result.points[i];
    const Integer t = expected[i][0], v = expected[i][1], w = expected[i][2];

    CHECK(pt.trace == 0);
    CHECK(pt.norm == Rational(-w));
    CHECK(pt.radicand == w);

    REQUIRE(pt.companions.size() == 3);
    CHECK(pt.companions[0].first == "t");
    CHECK(pt.companions[0].second == QuadNum(Rational(t)));
    CHECK(pt.companions[1].first == "u");
    const QuadNum& u = pt.companions[1].second;
    CHECK(pt.companions[2].first == "v");
    CHECK(pt.companions[2].second == QuadNum(Rational(v)));

    // Both equations with zero residual, on exact values.
    CHECK(t * t - 2 * v * v == 1);
    CHECK(u * u - QuadNum(Rational(3 * v * v)) == QuadNum(Rational(1)));
    CHECK(u.radicand() == w);  // w is square-free for these four points
  }

  CHECK_THROWS_AS(two_pell_points(0), PreconditionError);
}

TEST_CASE("is_s_unit: factorization over the allowed primes only") {
  const std::vector<Integer> s23 = {2, 3};
  CHECK(is_s_unit(Rational(1), s23));
  CHECK(is_s_unit(Rational(-1), s23));
  CHECK(is_s_unit(Rational(12), s23));
  CHECK(is_s_unit(Rational(1, 36), s23));
  CHECK(is_s_unit(Rational(-8, 9), s23));
  CHECK_FALSE(is_s_unit(Rational(0), s23));
  CHECK_FALSE(is_s_unit(Rational(7), s23));
  CHECK_FALSE(is_s_unit(Rational(1, 5), s23));
  CHECK_FALSE(is_s_unit(Rational(10), s23));
  CHECK(is_s_unit(Rational(10), {2, 5}));
  CHECK(is_s_unit(Rational(7), {}) == false);
  CHECK(is_s_unit(Rational(1), {}));
  CHECK_THROWS_AS(is_s_unit(Rational(2), {Integer(1)}), PreconditionError);
}

TEST_CASE("unit-box quadratic points: frozen real and imaginary cases") {
  const std::vector<Integer> s23 = {2, 3};

  // r = 2, s = 9: trace 6, disc 28, the real point x = 3 + sqrt(7).
  auto point = ex13_point(2, 9, s23);
  REQUIRE(point.has_value());
  CHECK(point->trace == 6);
  CHECK(point->norm == 2);
  CHECK(point->radicand == 7);
  CHECK(point->s_primes == s23);
  REQUIRE(point->companions.size() == 2);
  CHECK(point->companions[0].first == "x");
  CHECK(point->companions[0].second == QuadNum(3, 1, 7));
  CHECK(point->companions[1].first == "y");
  const QuadNum y = point->companions[1].second;
  const QuadNum x = point->companions[0].second;
  CHECK(x * (x + QuadNum(Rational(1))) * y == QuadNum(Rational(1)));
  CHECK(y.field_norm() == Rational(1, 18));  // 1/(r s)

  // r = 2, s = 3: trace 0, disc -8, an imaginary quadratic point. The
  // verification ran inside the quotient ring; no radical companions exist.
  point = ex13_point(2, 3, s23);
  REQUIRE(point.has_value());
  CHECK(point->trace == 0);
  CHECK(point->norm == 2);
  CHECK(point->radicand == -2);
  CHECK(point->companions.empty());

  // r = 4, s = 9: disc = 16 - 16 = 0, a rational (repeated) root: skipped.
  CHECK_FALSE(ex13_point(4, 9, s23).has_value());

  // Units outside the prime set are refused.
  CHECK_THROWS_AS(ex13_point(5, 2, s23), NotAnSUnitError);
  CHECK_THROWS_AS(ex13_point(2, Rational(1, 7), s23), NotAnSUnitError);
}

TEST_CASE("unit-box sweep: every emitted point passes its exact norm identities") {
  const std::vector<Integer> s23 = {2, 3};
  // All sign * 2^a 3^b with |a|, |b| <= 1, for both coordinates.
  std::vector<Rational> units;
  for (int sign : {1, -1}) {
    for (int a = -1; a <= 1; ++a) {
      for (int b = -1; b <= 1; ++b) {
        Rational u = sign;
        for (int i = 0; i < a; ++i) u *= 2;
        for (int i = 0; i > a; --i) u /= 2;
        for (int i = 0; i < b; ++i) u *= 3;
        for (int i = 0; i > b; --i) u /= 3;
        units.push_back(u);
      }
    }
  }
  REQUIRE(units.size() == 18);

  int emitted = 0, skipped = 0;
  for (const Rational& r : units) {
    for (const Rational& s : units) {
      const auto point = ex13_point(r, s, s23);  // throws on any broken identity
      if (!point) {
        ++skipped;
        continue;
      }
      ++emitted;
      CHECK(point->trace == s - r - 1);
      CHECK(point->norm == r);
      CHECK_FALSE(is_perfect_square(point->trace * point->trace - 4 * r));
      if (!point->companions.empty()) {
        const QuadNum& x = point->companions[0].second;
        CHECK(eval_quadratic(Rational(1), -(s - r - 1), r, x).is_zero());
        CHECK((x + QuadNum(Rational(1))).field_norm() == s);
      }
    }
  }
  CHECK(emitted + skipped == 18 * 18);
  CHECK(emitted > 250);  // the sweep mostly produces genuine quadratic points
}

TEST_CASE("projective image grouping: balanced pairings and the 3|1 obstruction") {
  using PV = ProjValue;
  const auto inf = PV::inf();

  // Balanced: {inf, inf} and {3/4, 3/4}.
  auto verdict = addendum_check({inf, inf, PV::of(Rational(3, 4)), PV::of(Rational(3, 4))});
  CHECK(verdict.distinct_count == 2);
  CHECK(verdict.has_pairing);
  CHECK_FALSE(verdict.unbalanced);
  CHECK(verdict.epsilons == std::array<int, 4>{1, 1, -1, -1});
  REQUIRE(verdict.groups.size() == 2);
  CHECK(verdict.groups[0] == std::vector<std::size_t>{0, 1});
  CHECK(verdict.groups[1] == std::vector<std::size_t>{2, 3});

  // Interleaved balanced case: epsilons follow membership, not position.
  verdict = addendum_check({PV::of(Rational(1)), PV::of(Rational(2)),
                            PV::of(Rational(1)), PV::of(Rational(2))});
  CHECK(verdict.has_pairing);
  CHECK(verdict.epsilons == std::array<int, 4>{1, -1, 1, -1});
  int sum = 0;
  for (int e : verdict.epsilons) sum += e;
  CHECK(sum == 0);

  // 3|1 split: two values but no zero-sum sign vector.
  verdict = addendum_check({PV::of(Rational(1)), PV::of(Rational(1)),
                            PV::of(Rational(1)), PV::of(Rational(5))});
  CHECK(verdict.distinct_count == 2);
  CHECK_FALSE(verdict.has_pairing);
  CHECK(verdict.unbalanced);
  CHECK(verdict.epsilons == std::array<int, 4>{0, 0, 0, 0});

  // One, three and four distinct values: no two-value structure at all.
  verdict = addendum_check({inf, inf, inf, inf});
  CHECK(verdict.distinct_count == 1);
  CHECK_FALSE(verdict.has_pairing);
  CHECK_FALSE(verdict.unbalanced);

  verdict = addendum_check({PV::of(Rational(1)), PV::of(Rational(2)),
                            PV::of(Rational(3)), PV::of(Rational(3))});
  CHECK(verdict.distinct_count == 3);
  CHECK_FALSE(verdict.has_pairing);

  verdict = addendum_check({PV::of(Rational(1)), PV::of(Rational(2)),
                            PV::of(Rational(3)), inf});
  CHECK(verdict.distinct_count == 4);
  CHECK_FALSE(verdict.has_pairing);

  // Infinity equals only itself.
  verdict = addendum_check({inf, PV::of(Rational(0)), inf, PV::of(Rational(0))});
  CHECK(verdict.distinct_count == 2);
  CHECK(verdict.has_pairing);
  CHECK(verdict.epsilons == std::array<int, 4>{1, -1, 1, -1});
}
