#pragma once

#include "degcrit/numeric.hpp"
#include "degcrit/surface.hpp"

#include <cstdint>
#include <vector>

namespace degcrit {

// Builders for the recurring intersection configurations. All of them assert
// both geometric hypothesis flags: the configurations they describe satisfy
// them by construction.

// Product of two lines, each with s >= 2 marked points removed: 2s boundary
// lines (s vertical then s horizontal), intersection 1 between opposite
// types, 0 otherwise, multiplicities all 1.
SurfaceInstance build_product_curve_instance(std::int64_t s);

// The fixed four-line configuration on the quadric surface (two vertical,
// two horizontal rulings); identical to build_product_curve_instance(2) up to
// labels.
SurfaceInstance build_p1xp1_instance();

// r >= 2 pairwise- and self-intersection-1 classes (diagonal translates on a
// symmetric square), multiplicities all 1.
SurfaceInstance build_symmetric_square_instance(std::int64_t r);

// r >= 4 translates of a polarization of degree e >= 1 on an abelian
// surface: constant matrix 2e, multiplicities all 1.
SurfaceInstance build_abelian_isogeny_instance(std::int64_t r, std::int64_t e);

namespace desk {

// The fully enumerable model: functions on the product of two lines with
// poles of order at most N along each of the 2s boundary lines. The function
// space has the monomial basis x^alpha y^beta / (prod_i (x-a_i)^N *
// prod_i (y-a_i)^N) with 0 <= alpha, beta <= N*s, hence dimension (Ns+1)^2.
struct DeskInstance {
  std::int64_t s = 0;
  std::int64_t n = 0;
  std::vector<Rational> marks;  // the s removed points per factor, distinct

  // Default marks a_i = i-1. Throws PreconditionError for s < 2, n < 1, or
  // duplicate marks.
  static DeskInstance make(std::int64_t s, std::int64_t n);
  static DeskInstance make(std::int64_t s, std::int64_t n,
                           std::vector<Rational> marks);
};

// Exponent pairs (alpha, beta) of the monomial basis.
struct MonomialSpace {
  std::int64_t s = 0;
  std::int64_t n = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> exponents;

  static MonomialSpace build(const DeskInstance& inst);
};

// (Ns+1)^2, by counting the monomial basis rather than evaluating the
// closed form.
Integer vn_dimension(const DeskInstance& inst);

// Dimensions x_j of the order-filtration quotients along the vertical line
// through the first mark. After translating that mark to 0, a basis monomial
// has vanishing order alpha - N along the line, so level j (functions of
// order >= j - 1 - N) collects the monomials with alpha >= j - 1. Enumerated
// exactly; for this model x_j = Ns+1 for j = 1..Ns+1.
std::vector<Integer> filtration_dims(const DeskInstance& inst);

// Same quotient dimensions along the horizontal line through the first mark
// (the x <-> y swap, enumerated over beta).
std::vector<Integer> filtration_dims_horizontal(const DeskInstance& inst);

// Per-level comparison of x_j against the cap U_j = 1 + n (D.C) - j C^2
// computed from the derived intersection numbers of
// build_product_curve_instance(s). The final entry (zero_space = true)
// records that the next level is the zero space.
struct LevelBound {
  Integer level;   // j, 1-based
  Integer dim;     // x_j
  Integer cap;     // U_j
  bool within = false;
  bool tight = false;
  bool zero_space = false;
};

std::vector<LevelBound> level_bound_report(const DeskInstance& inst);

// The order bookkeeping sum sum_j (j - 1 - n) x_j, evaluated through the
// generic order_sum with offset n (multiplicities are 1 in this model).
// Equals (ns+1)^2 n (s-2) / 2; positive exactly when s >= 3.
struct OrderSumCheck {
  Integer sum;
  bool positive = false;
};

OrderSumCheck order_sum_check(const DeskInstance& inst);

}  // namespace desk

}  // namespace degcrit
