#include "degcrit/errors.hpp"
#include "degcrit/quadnum.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

#include <random>
#include <vector>

using namespace degcrit;
using testutil::approx;
using testutil::rand_range;
using testutil::rand_rational;

TEST_CASE("canonical form: radicand square-free, rational values stored rationally") {
  // sqrt(12) = 2 sqrt(3): structural equality sees through the rewrite.
  CHECK(QuadNum(1, 2, 12) == QuadNum(1, 4, 3));
  // m = 1 and b = 0 both collapse to rational storage.
  CHECK(QuadNum(3, 5, 1) == QuadNum(Rational(8)));
  CHECK(QuadNum(Rational(3), Rational(0), Integer(7)) == QuadNum(Rational(3)));
  CHECK(QuadNum(0, 1, 0) == QuadNum(Rational(0)));

  const QuadNum x(Rational(1, 2), Rational(3), Integer(8));
  CHECK(x.rational_part() == Rational(1, 2));
  CHECK(x.radical_coeff() == 6);  // 3 sqrt(8) = 6 sqrt(2)
  CHECK(x.radicand() == 2);
  CHECK_FALSE(x.is_rational());

  CHECK(QuadNum(5).is_rational());
  CHECK(QuadNum(5).as_rational() == 5);
  CHECK_THROWS_AS(QuadNum(0, 1, 2).as_rational(), Error);
}

TEST_CASE("sqrt_of: frozen values and the defining identity") {
  CHECK(QuadNum::sqrt_of(Rational(49)) == QuadNum(Rational(7)));
  CHECK(QuadNum::sqrt_of(Rational(0)) == QuadNum(Rational(0)));
  CHECK(QuadNum::sqrt_of(Rational(4, 9)) == QuadNum(Rational(2, 3)));

  const QuadNum s18 = QuadNum::sqrt_of(Rational(18));
  CHECK(s18.radical_coeff() == 3);
  CHECK(s18.radicand() == 2);

  const QuadNum half = QuadNum::sqrt_of(Rational(1, 2));
  CHECK(half.radical_coeff() == Rational(1, 2));
  CHECK(half.radicand() == 2);

  CHECK_THROWS_AS(QuadNum::sqrt_of(Rational(-1)), PreconditionError);

  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational q(rand_range(rng, 0, 500), rand_range(rng, 1, 40));
    const QuadNum root = QuadNum::sqrt_of(q);
    CHECK(root * root == QuadNum(q));
    CHECK(root.sign() >= 0);
  }
}

TEST_CASE("exact sign decides convergent-sized gaps floating point would blur") {
  // Continued-fraction convergents to sqrt(2): the sign of h - k sqrt(2)
  // alternates while h^2 - 2k^2 alternates between +1 and -1.
  CHECK(QuadNum(7, -5, 2).sign() == -1);        // 49 < 50
  CHECK(QuadNum(17, -12, 2).sign() == 1);       // 289 > 288
  CHECK(QuadNum(99, -70, 2).sign() == 1);       // 9801 > 9800
  CHECK(QuadNum(239, -169, 2).sign() == -1);    // 57121 < 57122
  CHECK(QuadNum(Rational(114243), Rational(-80782), Integer(2)).sign() == 1);
  CHECK(QuadNum(0, 0, 0).sign() == 0);
  CHECK(QuadNum(0, 1, 2).sign() == 1);
  CHECK(QuadNum(0, -1, 2).sign() == -1);
  CHECK(QuadNum(-5, 2, 7).sign() == 1);   // 2 sqrt(7) = sqrt(28) > 5
  CHECK(QuadNum(-6, 2, 7).sign() == -1);  // sqrt(28) < 6
}

TEST_CASE("sign agrees with a 50-digit float evaluation on random values") {
  std::mt19937_64 rng(909);
  const std::vector<Integer> radicands = {2, 3, 5, 21};
  for (int trial = 0; trial < 400; ++trial) {
    const QuadNum x(rand_rational(rng, 30), rand_rational(rng, 30),
                    radicands[static_cast<std::size_t>(rand_range(rng, 0, 3))]);
    const auto value = approx(x);
    if (abs(value) > 1e-30) {
      CHECK(x.sign() == (value > 0 ? 1 : -1));
    } else {
      CHECK(x.sign() == 0);
    }
  }
}

TEST_CASE("conjugation, norm and trace") {
  const QuadNum x(3, -2, 5);
  CHECK(x.conjugate() == QuadNum(3, 2, 5));
  CHECK(x.field_norm() == Rational(9 - 4 * 5));
  CHECK(x * x.conjugate() == QuadNum(x.field_norm()));
  CHECK(x + x.conjugate() == QuadNum(Rational(6)));

  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const QuadNum a(rand_rational(rng, 20), rand_rational(rng, 20), Integer(3));
    const QuadNum b(rand_rational(rng, 20), rand_rational(rng, 20), Integer(3));
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
    CHECK((a * b).field_norm() == a.field_norm() * b.field_norm());
  }
}

TEST_CASE("field arithmetic: ring axioms and exact inverses under a fixed radicand") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const Integer m = (trial % 2 == 0) ? 2 : 7;
    const QuadNum x(rand_rational(rng, 25), rand_rational(rng, 25), m);
    const QuadNum y(rand_rational(rng, 25), rand_rational(rng, 25), m);
    const QuadNum z(rand_rational(rng, 25), rand_rational(rng, 25), m);

    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + y) - y == x);
    CHECK(x + (-x) == QuadNum(Rational(0)));
    if (!y.is_zero()) {
      CHECK((x * y) / y == x);
      CHECK(y / y == QuadNum(Rational(1)));
    }
    CHECK(x.sign() * y.sign() == (x * y).sign());
  }

  CHECK((QuadNum(0, 1, 2) * QuadNum(0, 1, 2)) == QuadNum(Rational(2)));
  CHECK_THROWS_AS(QuadNum(1, 1, 2) / QuadNum(Rational(0)), PreconditionError);
}

TEST_CASE("operations across genuinely different radical extensions are refused") {
  const QuadNum r2(0, 1, 2);
  const QuadNum r3(0, 1, 3);
  CHECK_THROWS_AS(r2 + r3, MixedRadicandsError);
  CHECK_THROWS_AS(r2 * r3, MixedRadicandsError);
  CHECK_THROWS_AS(compare(QuadNum(1, 1, 2), QuadNum(1, 1, 3)), MixedRadicandsError);

  // A rational on either side is always fine.
  CHECK(QuadNum(Rational(2)) * r3 == QuadNum(0, 2, 3));
  CHECK(compare(r2, QuadNum(Rational(2))) == -1);
  // Same extension written with non-square-free radicand is also fine.
  CHECK(r2 + QuadNum(0, 1, 8) == QuadNum(0, 3, 2));
}

TEST_CASE("compare is a total order consistent with sign of the difference") {
  std::mt19937_64 rng(8080);
  for (int trial = 0; trial < 250; ++trial) {
    const QuadNum x(rand_rational(rng, 15), rand_rational(rng, 15), Integer(5));
    const QuadNum y(rand_rational(rng, 15), rand_rational(rng, 15), Integer(5));
    const QuadNum z(rand_rational(rng, 15), rand_rational(rng, 15), Integer(5));

    CHECK(compare(x, y) == (x - y).sign());
    CHECK(compare(x, y) == -compare(y, x));
    CHECK((compare(x, y) == 0) == (x == y));
    if (less(x, y) && less(y, z)) CHECK(less(x, z));
  }
  CHECK(compare(QuadNum(7, -5, 2), QuadNum(Rational(0))) == -1);
  CHECK(less(QuadNum(Rational(1)), QuadNum(0, 1, 2)));
}

TEST_CASE("quad_roots classifies every degeneracy") {
  auto r = quad_roots(1, -14, 28);
  REQUIRE(r.kind == RootKind::TwoReal);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0] == QuadNum(7, -1, 21));
  CHECK(r.roots[1] == QuadNum(7, 1, 21));
  CHECK(less(r.roots[0], r.roots[1]));

  r = quad_roots(1, -8, 16);
  REQUIRE(r.kind == RootKind::DoubleRoot);
  REQUIRE(r.roots.size() == 1);
  CHECK(r.roots[0] == QuadNum(Rational(4)));

  r = quad_roots(0, 2, -7);
  REQUIRE(r.kind == RootKind::Linear);
  REQUIRE(r.roots.size() == 1);
  CHECK(r.roots[0] == QuadNum(Rational(7, 2)));

  r = quad_roots(1, 0, 1);
  CHECK(r.kind == RootKind::NoReal);
  CHECK(r.roots.empty());

  r = quad_roots(0, 0, 5);
  CHECK(r.kind == RootKind::NoReal);

  r = quad_roots(0, 0, 0);
  CHECK(r.kind == RootKind::DegenerateAllZero);
  CHECK(r.roots.empty());

  // Rational roots come out exactly rational.
  r = quad_roots(6, -5, 1);
  REQUIRE(r.kind == RootKind::TwoReal);
  CHECK(r.roots[0] == QuadNum(Rational(1, 3)));
  CHECK(r.roots[1] == QuadNum(Rational(1, 2)));
}

TEST_CASE("roots plug back in to exactly zero") {
  std::mt19937_64 rng(616);
  int real_cases = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Rational a2 = 0;
    while (a2 == 0) a2 = rand_rational(rng, 12);
    const Rational a1 = rand_rational(rng, 12);
    const Rational a0 = rand_rational(rng, 12);
    const auto roots = quad_roots(a2, a1, a0);
    for (const QuadNum& root : roots.roots) {
      CHECK(eval_quadratic(a2, a1, a0, root).is_zero());
      ++real_cases;
    }
    if (roots.kind == RootKind::TwoReal) {
      CHECK(less(roots.roots[0], roots.roots[1]));
      // Vieta, exactly.
      CHECK(roots.roots[0] + roots.roots[1] == QuadNum(-a1 / a2));
      CHECK(roots.roots[0] * roots.roots[1] == QuadNum(a0 / a2));
    }
  }
  CHECK(real_cases > 100);  // the suite actually exercised the real branch
}

TEST_CASE("min_positive_root picks the smallest strictly positive root") {
  CHECK(min_positive_root(quad_roots(1, -14, 28)) == QuadNum(7, -1, 21));
  CHECK(min_positive_root(quad_roots(1, -1, -2)) == QuadNum(Rational(2)));
  CHECK(min_positive_root(quad_roots(1, -5, 0)) == QuadNum(Rational(5)));
  CHECK(min_positive_root(quad_roots(0, 2, -7)) == QuadNum(Rational(7, 2)));
  CHECK(min_positive_root(quad_roots(1, -8, 16)) == QuadNum(Rational(4)));

  CHECK_THROWS_AS(min_positive_root(quad_roots(1, 3, 2)), NoPositiveRootError);
  CHECK_THROWS_AS(min_positive_root(quad_roots(1, 0, 1)), NoRealRootError);
  CHECK_THROWS_AS(min_positive_root(quad_roots(0, 0, 0)), NoRealRootError);
}

TEST_CASE("rendering: exact strings and display decimals") {
  CHECK(to_exact_string(QuadNum(Rational(45, 16))) == "45/16");
  CHECK(to_exact_string(QuadNum(7, -1, 21)) == "7 - sqrt(21)");
  CHECK(to_exact_string(QuadNum(-182, 42, 21)) == "-182 + 42*sqrt(21)");
  CHECK(to_exact_string(QuadNum(0, 1, 13)) == "sqrt(13)");
  CHECK(to_decimal_string(QuadNum(Rational(16))) == "16");
  CHECK(to_decimal_string(QuadNum(7, -1, 21)) == "2.41742430504");
}
