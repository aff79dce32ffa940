#include "degcrit/criterion.hpp"
#include "degcrit/deskmodel.hpp"
#include "degcrit/errors.hpp"

#include "doctest.h"

#include <set>
#include <vector>

using namespace degcrit;
using desk::DeskInstance;
using desk::MonomialSpace;

TEST_CASE("configuration builders and their preconditions") {
  const auto prod2 = build_product_curve_instance(2);
  const auto quad = build_p1xp1_instance();
  CHECK(prod2.p == quad.p);
  CHECK(prod2.matrix == quad.matrix);
  CHECK(prod2.assert_no_triple_points);
  CHECK(prod2.assert_ample);

  const auto prod3 = build_product_curve_instance(3);
  REQUIRE(prod3.size() == 6);
  // Opposite rulings meet once, parallel ones never.
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(prod3.matrix[i][j] == 0);
      CHECK(prod3.matrix[i + 3][j + 3] == 0);
      CHECK(prod3.matrix[i][j + 3] == 1);
    }
  }

  const auto sym = build_symmetric_square_instance(5);
  REQUIRE(sym.size() == 5);
  for (const auto& row : sym.matrix) {
    for (const auto& e : row) CHECK(e == 1);
  }

  const auto ab = build_abelian_isogeny_instance(4, 3);
  REQUIRE(ab.size() == 4);
  for (const auto& row : ab.matrix) {
    for (const auto& e : row) CHECK(e == 6);  // 2e
  }

  CHECK_THROWS_AS(build_product_curve_instance(1), PreconditionError);
  CHECK_THROWS_AS(build_symmetric_square_instance(1), PreconditionError);
  CHECK_THROWS_AS(build_abelian_isogeny_instance(3, 1), PreconditionError);
  CHECK_THROWS_AS(build_abelian_isogeny_instance(4, 0), PreconditionError);
}

TEST_CASE("desk instances validate their parameters") {
  CHECK_THROWS_AS(DeskInstance::make(1, 1), PreconditionError);
  CHECK_THROWS_AS(DeskInstance::make(2, 0), PreconditionError);
  CHECK_THROWS_AS(DeskInstance::make(2, 1, {Rational(0), Rational(0)}),
                  PreconditionError);

  const auto inst = DeskInstance::make(3, 2);
  CHECK(inst.marks == std::vector<Rational>{0, 1, 2});
  const auto custom = DeskInstance::make(2, 1, {Rational(5), Rational(1, 2)});
  CHECK(custom.marks.size() == 2);
}

TEST_CASE("function-space dimension is (Ns+1)^2, counted not computed") {
  for (std::int64_t s = 2; s <= 5; ++s) {
    for (std::int64_t n = 1; n <= 4; ++n) {
      const auto inst = DeskInstance::make(s, n);
      const Integer expected = Integer(n * s + 1) * Integer(n * s + 1);
      CHECK(desk::vn_dimension(inst) == expected);

      const auto space = MonomialSpace::build(inst);
      CHECK(Integer(space.exponents.size()) == expected);
      // Exponent pairs are exactly the lattice box [0, ns]^2, no repeats.
      std::set<std::pair<std::int64_t, std::int64_t>> seen(space.exponents.begin(),
                                                           space.exponents.end());
      CHECK(seen.size() == space.exponents.size());
      for (const auto& [alpha, beta] : space.exponents) {
        CHECK(alpha >= 0);
        CHECK(beta >= 0);
        CHECK(alpha <= n * s);
        CHECK(beta <= n * s);
      }
    }
  }
}

TEST_CASE("order-filtration quotients are flat at Ns+1, both directions") {
  for (std::int64_t s = 2; s <= 5; ++s) {
    for (std::int64_t n = 1; n <= 4; ++n) {
      const auto inst = DeskInstance::make(s, n);
      const auto dims = desk::filtration_dims(inst);
      REQUIRE(Integer(dims.size()) == n * s + 1);
      Integer total = 0;
      for (const auto& x : dims) {
        CHECK(x == n * s + 1);
        total += x;
      }
      CHECK(total == desk::vn_dimension(inst));
      CHECK(desk::filtration_dims_horizontal(inst) == dims);
    }
  }
}

TEST_CASE("every quotient dimension meets its cap exactly in this model") {
  for (std::int64_t s = 2; s <= 5; ++s) {
    for (std::int64_t n = 1; n <= 3; ++n) {
      const auto report = desk::level_bound_report(DeskInstance::make(s, n));
      REQUIRE(Integer(report.size()) == n * s + 2);
      for (std::size_t j = 0; j + 1 < report.size(); ++j) {
        const auto& row = report[j];
        CHECK(row.level == Integer(j + 1));
        CHECK(row.within);
        CHECK(row.tight);
        CHECK(row.dim == n * s + 1);
        CHECK(row.cap == n * s + 1);  // 1 + n*s - j*0
        CHECK_FALSE(row.zero_space);
      }
      CHECK(report.back().zero_space);
      CHECK(report.back().level == Integer(report.size()));
    }
  }
}

TEST_CASE("order bookkeeping sum: closed form and sign threshold") {
  // Frozen smallest case: s = 3, N = 1 gives dims (4,4,4,4) and sum 8.
  const auto small = desk::order_sum_check(DeskInstance::make(3, 1));
  CHECK(small.sum == 8);
  CHECK(small.positive);

  for (std::int64_t s = 2; s <= 5; ++s) {
    for (std::int64_t n = 1; n <= 4; ++n) {
      const auto check = desk::order_sum_check(DeskInstance::make(s, n));
      const Integer d = Integer(n * s + 1) * Integer(n * s + 1);
      CHECK(check.sum * 2 == d * n * (s - 2));
      CHECK(check.positive == (s >= 3));
    }
  }
}

TEST_CASE("the enumerated model agrees with the abstract criterion's threshold") {
  for (std::int64_t s = 2; s <= 5; ++s) {
    const auto verdict = check_degeneracy(build_product_curve_instance(s));
    const auto counted = desk::order_sum_check(DeskInstance::make(s, 1));
    CHECK(verdict.all_margins_positive == counted.positive);
  }
}

TEST_CASE("dimension excess over the leading term is the boundary count 2Ns+1") {
  for (std::int64_t s = 2; s <= 5; ++s) {
    const auto derived = derive(build_product_curve_instance(s));
    CHECK(derived.d_sq == 2 * s * s);
    for (std::int64_t n = 1; n <= 4; ++n) {
      const Integer d = desk::vn_dimension(DeskInstance::make(s, n));
      const Integer leading = Integer(n) * Integer(n) * derived.d_sq / 2;
      CHECK(d - leading == 2 * n * s + 1);
    }
  }
}
