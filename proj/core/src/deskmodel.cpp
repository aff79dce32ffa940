#include "degcrit/deskmodel.hpp"

#include "degcrit/errors.hpp"
#include "degcrit/filtration.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace degcrit {

namespace {

std::vector<std::vector<Integer>> constant_matrix(std::size_t r, const Integer& value) {
  return std::vector<std::vector<Integer>>(r, std::vector<Integer>(r, value));
}

}  // namespace

SurfaceInstance build_product_curve_instance(std::int64_t s) {
  if (s < 2) {
    throw PreconditionError("product-curve configuration needs s >= 2, got " +
                            std::to_string(s));
  }
  const std::size_t r = static_cast<std::size_t>(2 * s);
  std::vector<std::string> labels;
  for (std::int64_t i = 1; i <= s; ++i) labels.push_back("V" + std::to_string(i));
  for (std::int64_t i = 1; i <= s; ++i) labels.push_back("H" + std::to_string(i));
  std::vector<std::vector<Integer>> matrix = constant_matrix(r, Integer(0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const bool vertical_i = i < static_cast<std::size_t>(s);
      const bool vertical_j = j < static_cast<std::size_t>(s);
      matrix[i][j] = (vertical_i != vertical_j) ? 1 : 0;
    }
  }
  return make_surface_instance(std::move(labels), std::vector<Integer>(r, Integer(1)),
                               std::move(matrix), true, true);
}

SurfaceInstance build_p1xp1_instance() {
  std::vector<std::string> labels = {"x=0", "x=inf", "y=0", "y=inf"};
  std::vector<std::vector<Integer>> matrix = {
      {0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}};
  return make_surface_instance(std::move(labels), std::vector<Integer>(4, Integer(1)),
                               std::move(matrix), true, true);
}

SurfaceInstance build_symmetric_square_instance(std::int64_t r) {
  if (r < 2) {
    throw PreconditionError("symmetric-square configuration needs r >= 2, got " +
                            std::to_string(r));
  }
  const std::size_t n = static_cast<std::size_t>(r);
  return make_surface_instance({}, std::vector<Integer>(n, Integer(1)),
                               constant_matrix(n, Integer(1)), true, true);
}

SurfaceInstance build_abelian_isogeny_instance(std::int64_t r, std::int64_t e) {
  if (r < 4) {
    throw PreconditionError(
        "abelian translate configuration needs r >= 4 classes, got " +
        std::to_string(r));
  }
  if (e < 1) {
    throw PreconditionError("polarization degree must be >= 1, got " +
                            std::to_string(e));
  }
  const std::size_t n = static_cast<std::size_t>(r);
  std::vector<std::string> labels;
  for (std::int64_t i = 1; i <= r; ++i) labels.push_back("E" + std::to_string(i));
  return make_surface_instance(std::move(labels), std::vector<Integer>(n, Integer(1)),
                               constant_matrix(n, Integer(2 * e)), true, true);
}

namespace desk {

DeskInstance DeskInstance::make(std::int64_t s, std::int64_t n) {
  std::vector<Rational> marks;
  for (std::int64_t i = 0; i < s; ++i) marks.push_back(Rational(i));
  return make(s, n, std::move(marks));
}

DeskInstance DeskInstance::make(std::int64_t s, std::int64_t n,
                                std::vector<Rational> marks) {
  if (s < 2) {
    throw PreconditionError("desk model needs s >= 2 marks, got " +
                            std::to_string(s));
  }
  if (n < 1) {
    throw PreconditionError("desk model needs n >= 1, got " + std::to_string(n));
  }
  if (marks.size() != static_cast<std::size_t>(s)) {
    throw PreconditionError("expected " + std::to_string(s) + " marks, got " +
                            std::to_string(marks.size()));
  }
  std::set<Rational> distinct(marks.begin(), marks.end());
  if (distinct.size() != marks.size()) {
    throw PreconditionError("marks must be pairwise distinct");
  }
  DeskInstance inst;
  inst.s = s;
  inst.n = n;
  inst.marks = std::move(marks);
  return inst;
}

MonomialSpace MonomialSpace::build(const DeskInstance& inst) {
  MonomialSpace space;
  space.s = inst.s;
  space.n = inst.n;
  const std::int64_t top = inst.n * inst.s;
  for (std::int64_t alpha = 0; alpha <= top; ++alpha) {
    for (std::int64_t beta = 0; beta <= top; ++beta) {
      space.exponents.emplace_back(alpha, beta);
    }
  }
  return space;
}

Integer vn_dimension(const DeskInstance& inst) {
  return Integer(MonomialSpace::build(inst).exponents.size());
}

namespace {

// Shared enumeration: order along the chosen boundary line of the basis
// element with exponents (alpha, beta) is (x-exponent after translating the
// first mark to 0) - n, which is alpha - n for the vertical line and beta - n
// for the horizontal one. Levels are 1-based; level j collects orders
// >= j - 1 - n.
std::vector<Integer> dims_by_exponent(const DeskInstance& inst, bool vertical) {
  const MonomialSpace space = MonomialSpace::build(inst);
  const std::int64_t top = inst.n * inst.s;
  // histogram over the relevant exponent
  std::vector<Integer> count(static_cast<std::size_t>(top) + 1, Integer(0));
  for (const auto& [alpha, beta] : space.exponents) {
    const std::int64_t e = vertical ? alpha : beta;
    ++count[static_cast<std::size_t>(e)];
  }
  // x_j = #(exponent == j - 1): order >= j - 1 - n means exponent >= j - 1,
  // so the level-j quotient is exactly the exponent slice j - 1. Trailing
  // all-zero levels are trimmed.
  std::vector<Integer> dims;
  for (std::int64_t j = 1; j <= top + 1; ++j) {
    dims.push_back(count[static_cast<std::size_t>(j - 1)]);
  }
  while (!dims.empty() && dims.back() == 0) dims.pop_back();
  return dims;
}

}  // namespace

std::vector<Integer> filtration_dims(const DeskInstance& inst) {
  return dims_by_exponent(inst, true);
}

std::vector<Integer> filtration_dims_horizontal(const DeskInstance& inst) {
  return dims_by_exponent(inst, false);
}

std::vector<LevelBound> level_bound_report(const DeskInstance& inst) {
  const std::vector<Integer> dims = filtration_dims(inst);
  const SurfaceInstance surf = build_product_curve_instance(inst.s);
  const DerivedIntersections derived = derive(surf);
  // The vertical line is divisor 0 of the product-curve configuration.
  const Integer ddc = derived.d_dot[0];
  const Integer csq = derived.self_int[0];

  std::vector<LevelBound> report;
  for (std::size_t j = 1; j <= dims.size(); ++j) {
    LevelBound row;
    row.level = Integer(j);
    row.dim = dims[j - 1];
    row.cap = 1 + Integer(inst.n) * ddc - Integer(j) * csq;
    row.within = row.dim <= row.cap;
    row.tight = row.dim == row.cap;
    report.push_back(std::move(row));
  }
  LevelBound tail;
  tail.level = Integer(dims.size() + 1);
  tail.zero_space = true;  // the next level is the zero space
  tail.within = true;
  report.push_back(std::move(tail));
  return report;
}

OrderSumCheck order_sum_check(const DeskInstance& inst) {
  OrderSumCheck out;
  out.sum = order_sum(filtration_dims(inst), Integer(inst.n));
  out.positive = out.sum > 0;
  return out;
}

}  // namespace desk

}  // namespace degcrit
