#include "degcrit/criterion.hpp"

#include "degcrit/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <utility>

namespace degcrit {

namespace {

void check_index(const DerivedIntersections& derived, std::size_t index) {
  if (index >= derived.d_dot.size()) {
    throw PreconditionError("divisor index " + std::to_string(index) +
                            " out of range (r = " +
                            std::to_string(derived.d_dot.size()) + ")");
  }
}

// An ample D forces D^2 > 0 and (D.D_i) > 0 for effective D_i; data missing
// either cannot come from the asserted situation.
void check_positivity(const DerivedIntersections& derived, std::size_t index) {
  if (derived.d_sq <= 0) {
    throw InconsistentDataError("D^2 = " + to_string(derived.d_sq) +
                                " is not positive; D cannot be ample");
  }
  if (derived.d_dot[index] <= 0) {
    throw InconsistentDataError("(D.D_i) = " + to_string(derived.d_dot[index]) +
                                " for divisor " + std::to_string(index) +
                                " is not positive; D cannot be ample");
  }
}

}  // namespace

QuadNum xi(const DerivedIntersections& derived, std::size_t index) {
  check_index(derived, index);
  check_positivity(derived, index);
  const Rational a2 = Rational(derived.self_int[index]);
  const Rational a1 = Rational(-2 * derived.d_dot[index]);
  const Rational a0 = Rational(derived.d_sq);
  const QuadRoots roots = quad_roots(a2, a1, a0);
  try {
    return min_positive_root(roots);
  } catch (const NoRealRootError& e) {
    throw InconsistentDataError("divisor " + std::to_string(index) +
                                ": defining quadratic has no real root (" +
                                e.what() + ")");
  } catch (const NoPositiveRootError& e) {
    throw InconsistentDataError("divisor " + std::to_string(index) +
                                ": defining quadratic has no positive root (" +
                                e.what() + ")");
  }
}

DivisorCriterion divisor_criterion(const SurfaceInstance& inst,
                                   const DerivedIntersections& derived,
                                   std::size_t index) {
  check_index(derived, index);
  check_positivity(derived, index);
  DivisorCriterion out;
  out.index = index;
  out.label = inst.labels[index];

  const Rational a2 = Rational(derived.self_int[index]);
  const Rational a1 = Rational(-2 * derived.d_dot[index]);
  const Rational a0 = Rational(derived.d_sq);
  const QuadRoots roots = quad_roots(a2, a1, a0);
  out.root_kind = roots.kind;
  try {
    out.xi = min_positive_root(roots);
  } catch (const NoRealRootError& e) {
    throw InconsistentDataError("divisor " + std::to_string(index) +
                                ": defining quadratic has no real root (" +
                                e.what() + ")");
  } catch (const NoPositiveRootError& e) {
    throw InconsistentDataError("divisor " + std::to_string(index) +
                                ": defining quadratic has no positive root (" +
                                e.what() + ")");
  }

  const QuadNum two_dsq_xi = QuadNum(Rational(2 * derived.d_sq)) * out.xi;
  const QuadNum mixed = QuadNum(Rational(derived.d_dot[index])) * out.xi * out.xi;
  const QuadNum fixed = QuadNum(Rational(3 * derived.d_sq * inst.p[index]));
  out.margin = two_dsq_xi - mixed - fixed;
  out.holds = out.margin.sign() > 0;
  return out;
}

UniformProductCase uniform_products(const SurfaceInstance& inst) {
  const std::size_t r = inst.size();
  UniformProductCase out;

  bool off_same = true;
  std::optional<Integer> off;
  for (std::size_t i = 0; i < r && off_same; ++i) {
    for (std::size_t j = i + 1; j < r && off_same; ++j) {
      const Integer prod = inst.p[i] * inst.p[j] * inst.matrix[i][j];
      if (!off) {
        off = prod;
      } else if (*off != prod) {
        off_same = false;
      }
    }
  }
  if (off_same) out.off_diagonal_constant = off;

  bool diag_same = true;
  std::optional<Integer> diag;
  for (std::size_t i = 0; i < r && diag_same; ++i) {
    const Integer prod = inst.p[i] * inst.p[i] * inst.matrix[i][i];
    if (!diag) {
      diag = prod;
    } else if (*diag != prod) {
      diag_same = false;
    }
  }
  if (diag_same) out.diagonal_constant = diag;

  if (!off_same) {
    out.notes.push_back("off-diagonal products p_i p_j (D_i.D_j) are not constant");
  }
  if (!diag_same) {
    out.notes.push_back("diagonal products p_i^2 D_i^2 are not constant");
  }
  if (off_same && diag_same) {
    if (*off == *diag) {
      out.constant = *off;
    } else {
      out.notes.push_back("diagonal product " + to_string(*diag) +
                          " differs from off-diagonal product " + to_string(*off));
    }
  }

  if (out.constant) {
    if (*out.constant <= 0) {
      out.notes.push_back("common product " + to_string(*out.constant) +
                          " is not positive");
    } else if (r < 4) {
      out.notes.push_back("uniform-product shortcut needs r >= 4, got r = " +
                          std::to_string(r));
    } else {
      out.applicable = true;
    }
  }

  // Multiplicity inference from the matrix alone: with every entry positive,
  // anchor q[0] = 1; then q[j] = M[0][0] / M[0][j] is forced by
  // q_i q_j M[i][j] = const, and the full system is verified afterwards.
  bool all_positive = true;
  for (std::size_t i = 0; i < r && all_positive; ++i) {
    for (std::size_t j = 0; j < r && all_positive; ++j) {
      if (inst.matrix[i][j] <= 0) all_positive = false;
    }
  }
  if (all_positive) {
    std::vector<Rational> q(r);
    q[0] = 1;
    const Rational c0 = Rational(inst.matrix[0][0]);
    for (std::size_t j = 1; j < r; ++j) {
      q[j] = Rational(inst.matrix[0][0], inst.matrix[0][j]);
    }
    bool consistent = true;
    for (std::size_t i = 0; i < r && consistent; ++i) {
      for (std::size_t j = 0; j < r && consistent; ++j) {
        if (q[i] * q[j] * Rational(inst.matrix[i][j]) != c0) consistent = false;
      }
    }
    if (consistent) {
      Integer scale = 1;
      for (const Rational& qi : q) {
        scale = boost::multiprecision::lcm(scale, denominator(qi));
      }
      std::vector<Integer> ints(r);
      Integer g = 0;
      for (std::size_t i = 0; i < r; ++i) {
        ints[i] = numerator(q[i]) * (scale / denominator(q[i]));
        g = boost::multiprecision::gcd(g, ints[i]);
      }
      for (Integer& v : ints) v /= g;
      out.inferred_p = std::move(ints);
    } else {
      out.notes.push_back(
          "matrix ratios admit no multiplicity vector with constant products");
    }
  } else {
    out.notes.push_back(
        "multiplicity inference skipped: matrix has non-positive entries");
  }

  return out;
}

CriterionReport check_degeneracy(const SurfaceInstance& inst) {
  const DerivedIntersections derived = derive(inst);
  const IndexScreenReport screen = hodge_check(inst, derived);
  if (!screen.all_ok) {
    std::string offenders;
    for (const IndexScreenEntry& e : screen.entries) {
      if (!e.ok) {
        if (!offenders.empty()) offenders += ", ";
        offenders += inst.labels[e.index] + " (D^2 D_i^2 = " + to_string(e.lhs) +
                     " > (D.D_i)^2 = " + to_string(e.rhs) + ")";
      }
    }
    throw InconsistentDataError(
        "intersection data fails the signature screen for " + offenders +
        "; no surface with D big and nef carries these numbers");
  }

  CriterionReport report;
  report.assert_no_triple_points = inst.assert_no_triple_points;
  report.assert_ample = inst.assert_ample;
  report.warnings = inst.warnings;

  report.all_margins_positive = true;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    DivisorCriterion dc = divisor_criterion(inst, derived, i);
    report.all_margins_positive = report.all_margins_positive && dc.holds;
    report.divisors.push_back(std::move(dc));
  }

  report.uniform = uniform_products(inst);
  if (report.uniform.constant) {
    // In the uniform case the minimal root collapses to r p_i; record the
    // cross-check outcome.
    bool match = true;
    for (const DivisorCriterion& dc : report.divisors) {
      const QuadNum expected =
          QuadNum(Rational(Integer(inst.size()) * inst.p[dc.index]));
      if (dc.xi != expected) match = false;
    }
    report.uniform.notes.push_back(
        match ? "xi_i = r p_i confirmed for every divisor"
              : "xi_i = r p_i FAILED for some divisor (unexpected)");
  }

  report.criterion_holds = report.all_margins_positive &&
                           inst.assert_no_triple_points && inst.assert_ample;
  if (report.all_margins_positive && !inst.assert_no_triple_points) {
    report.warnings.push_back(
        "margins are positive but assert_no_triple_points is false: verdict withheld");
  }
  if (report.all_margins_positive && !inst.assert_ample) {
    report.warnings.push_back(
        "margins are positive but assert_ample is false: verdict withheld");
  }
  return report;
}

namespace {

// The certifying cubic
//   f(l) = (D.D_i) l^2 / 2 - D_i^2 l^3 / 3 - D^2 p_i / 2
// as an exact rational.
Rational certifying_cubic(const Rational& ddi, const Rational& dii,
                          const Rational& dsq_p, const Rational& l) {
  return ddi * l * l / 2 - dii * l * l * l / 3 - dsq_p / 2;
}

// Rational lower bound for the irrational minimal positive root of
// D_i^2 t^2 - 2 (D.D_i) t + D^2, within `gap` of it. The quadratic is
// positive on [0, root) and negative just above the root, which gives the
// bisection its sign test.
Rational bisect_toward_root(const Integer& dii, const Integer& ddi,
                            const Integer& dsq, const Rational& gap) {
  const auto q = [&](const Rational& t) {
    return Rational(dii) * t * t - 2 * Rational(ddi) * t + Rational(dsq);
  };
  Rational lo = 0;
  Rational hi;
  if (dii > 0) {
    hi = Rational(ddi, dii);  // vertex: strictly between the two roots
  } else {
    hi = 1;
    while (q(hi) > 0) hi *= 2;  // dii < 0: walk past the single positive root
  }
  while (hi - lo > gap) {
    const Rational mid = (lo + hi) / 2;
    if (q(mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

LambdaWindow lambda_window(const SurfaceInstance& inst,
                           const DerivedIntersections& derived,
                           std::size_t index) {
  const DivisorCriterion crit = divisor_criterion(inst, derived, index);
  if (!crit.holds) {
    throw NoWindowFoundError("divisor " + std::to_string(index) + " (" +
                             crit.label + "): margin " +
                             to_exact_string(crit.margin) +
                             " is not positive, no window exists");
  }

  const Rational ddi = Rational(derived.d_dot[index]);
  const Rational dii = Rational(derived.self_int[index]);
  const Rational dsq_p = Rational(derived.d_sq * inst.p[index]);

  // Dyadic approach to xi from below with doubling exponent: gaps
  // 2^-1, 2^-2, 2^-4, 2^-8, ... The cubic tends to a positive limit at xi
  // whenever the margin is positive, so this terminates quickly; the cap is
  // pure defence.
  for (int k = 1; k <= 4096; k *= 2) {
    Rational lambda;
    if (crit.xi.is_rational()) {
      const Integer two_k = Integer(1) << k;
      lambda = crit.xi.as_rational() * Rational(two_k - 1, two_k);
    } else {
      const Rational gap = Rational(1, Integer(1) << k);
      lambda = bisect_toward_root(derived.self_int[index], derived.d_dot[index],
                                  derived.d_sq, gap);
    }
    if (lambda <= 0) continue;
    const Rational value = certifying_cubic(ddi, dii, dsq_p, lambda);
    if (value > 0) {
      LambdaWindow out;
      out.index = index;
      out.lambda = lambda;
      out.cubic_value = value;
      out.dyadic_exponent = k;
      // (D.D_i) l - D_i^2 l^2 / 2 < D^2 / 2 holds automatically on
      // 0 < l < xi; evaluate it anyway as a cross-check.
      out.budget_ok = ddi * lambda - dii * lambda * lambda / 2 <
                      Rational(derived.d_sq) / 2;
      return out;
    }
  }
  throw NoWindowFoundError("divisor " + std::to_string(index) +
                           ": no dyadic candidate certified the cubic "
                           "(exhausted exponent cap)");
}

LevelCapSum sum_level_caps(const DerivedIntersections& derived, std::size_t index,
                           const Integer& n, const Rational& lambda) {
  check_index(derived, index);
  if (n <= 0) {
    throw PreconditionError("sum_level_caps: n must be positive");
  }
  if (lambda <= 0) {
    throw PreconditionError("sum_level_caps: lambda must be positive");
  }
  const Integer r_levels = floor_rational(lambda * Rational(n));
  const Integer ddi = derived.d_dot[index];
  const Integer dii = derived.self_int[index];

  LevelCapSum out;
  out.level_count = r_levels;
  out.total = r_levels * (1 + n * ddi) - dii * (r_levels * (r_levels + 1) / 2);
  // U_R is the smallest cap whenever D_i^2 >= 0, so this is "every cap
  // positive" in the regime the bookkeeping is used for; R = 0 is vacuous.
  const Integer u_last = 1 + n * ddi - r_levels * dii;
  out.all_positive = r_levels == 0 || u_last > 0;
  return out;
}

}  // namespace degcrit
