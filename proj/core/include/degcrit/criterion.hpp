#pragma once

#include "degcrit/quadnum.hpp"
#include "degcrit/surface.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace degcrit {

// Everything the checker decides about one divisor D_i of a configuration,
// with D = sum p_j D_j:
//   xi     = minimal positive root of  D_i^2 t^2 - 2 (D.D_i) t + D^2 = 0
//   margin = 2 D^2 xi - (D.D_i) xi^2 - 3 D^2 p_i
//   holds  = margin > 0 (strict)
struct DivisorCriterion {
  std::size_t index = 0;
  std::string label;
  QuadNum xi;
  RootKind root_kind = RootKind::NoReal;
  QuadNum margin;
  bool holds = false;

  bool operator==(const DivisorCriterion&) const = default;
};

// Minimal positive root of the defining quadratic for divisor i. Demands
// D^2 > 0 and (D.D_i) > 0 first (necessary consequences of D ample) and
// throws InconsistentDataError otherwise; root failures (no real root, no
// positive root) are reported the same way, naming the divisor, because for
// data passing those screens plus the signature screen they cannot occur.
QuadNum xi(const DerivedIntersections& derived, std::size_t index);

DivisorCriterion divisor_criterion(const SurfaceInstance& inst,
                                   const DerivedIntersections& derived,
                                   std::size_t index);

// Detection of the uniform-product special case p_i p_j (D_i.D_j) = c. When
// the products (diagonal included) agree on a single positive constant and
// r >= 4, the criterion holds with xi_i = r p_i for every i.
struct UniformProductCase {
  std::optional<Integer> off_diagonal_constant;  // all i < j products, if equal
  std::optional<Integer> diagonal_constant;      // all i == j products, if equal
  std::optional<Integer> constant;               // common value, if the two agree
  bool applicable = false;                       // constant exists, > 0, r >= 4
  std::vector<std::string> notes;
  // Multiplicities recovered from the matrix alone (up to scale, emitted as
  // the coprime integer vector) when every entry is positive and the ratio
  // system is consistent.
  std::optional<std::vector<Integer>> inferred_p;

  bool operator==(const UniformProductCase&) const = default;
};

UniformProductCase uniform_products(const SurfaceInstance& inst);

// Full verdict for an instance. Runs the signature screen first and throws
// InconsistentDataError on violation. criterion_holds requires every
// per-divisor margin to be strictly positive and both geometric hypothesis
// flags to be asserted.
struct CriterionReport {
  std::vector<DivisorCriterion> divisors;
  UniformProductCase uniform;
  bool assert_no_triple_points = false;
  bool assert_ample = false;
  bool all_margins_positive = false;
  bool criterion_holds = false;
  std::vector<std::string> warnings;

  bool operator==(const CriterionReport&) const = default;
};

CriterionReport check_degeneracy(const SurfaceInstance& inst);

// A certified rational parameter 0 < lambda < xi_i for a divisor whose
// margin is positive. lambda is picked from the dyadic sequence
// xi (1 - 2^-k) with doubling exponent k = 1, 2, 4, 8, ... (bisection
// brackets replace exact scaling when xi is irrational) and certified by the
// exact cubic inequality
//   (D.D_i) lambda^2 / 2 - D_i^2 lambda^3 / 3 - D^2 p_i / 2 > 0.
// budget_ok records whether (D.D_i) lambda - D_i^2 lambda^2 / 2 < D^2 / 2;
// for 0 < lambda < xi this is automatic, so it is reported as a cross-check
// rather than searched for. Throws NoWindowFoundError when the divisor's
// margin is not positive (or, defensively, if no dyadic candidate certifies).
struct LambdaWindow {
  std::size_t index = 0;
  Rational lambda;
  Rational cubic_value;   // value of the certifying cubic at lambda
  bool budget_ok = false;
  int dyadic_exponent = 0;  // the k that produced lambda
};

LambdaWindow lambda_window(const SurfaceInstance& inst,
                           const DerivedIntersections& derived,
                           std::size_t index);

// Dimension-cap bookkeeping for the filtration attached to divisor i at
// degree level n: caps U_j = 1 + n (D.D_i) - j D_i^2 for j = 1..R with
// R = floor(lambda n), summed in closed form
//   sum = R (1 + n (D.D_i)) - D_i^2 R (R+1) / 2.
// all_positive records U_R > 0 — the smallest cap whenever D_i^2 >= 0 —
// vacuously true for R = 0.
struct LevelCapSum {
  Integer level_count;  // R
  Integer total;
  bool all_positive = false;
};

LevelCapSum sum_level_caps(const DerivedIntersections& derived, std::size_t index,
                           const Integer& n, const Rational& lambda);

}  // namespace degcrit
