#pragma once

#include "degcrit/numeric.hpp"
#include "degcrit/quadnum.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace degcrit::pell {

// Non-negative solution of t^2 - d v^2 = 1.
struct PellSolution {
  Integer t;
  Integer v;
};

// First `count` solutions in increasing v, starting from (1, 0): the
// fundamental solution comes from the continued-fraction expansion of
// sqrt(d) and the rest follow from the recurrence
// (t, v) -> (t0 t + d v0 v, t0 v + v0 t). Requires d >= 2 and not a perfect
// square (PreconditionError).
std::vector<PellSolution> pell_solutions(const Integer& d, std::size_t count);

// A quadratic point presented by the minimal polynomial X^2 - trace X + norm
// of its primary coordinate, together with exact companion coordinates and
// the primes allowed in denominators. disc = trace^2 - 4 norm is never a
// perfect square (the point is genuinely quadratic); radicand is the
// square-free part of |disc| carrying disc's sign.
struct QuadIntegralPoint {
  Rational trace;
  Rational norm;
  Integer radicand;
  std::vector<std::pair<std::string, QuadNum>> companions;
  std::vector<Integer> s_primes;
};

// Simultaneous Pell construction: for each solution (t, v) of t^2 - 2v^2 = 1
// with w = 3v^2 + 1 not a perfect square, the point (t, u, v) with
// u = sqrt(w), which satisfies u^2 - 3v^2 = 1 by construction. Both
// equations are re-verified exactly for every emitted point; solutions with
// w a perfect square (rational u) are skipped and counted.
struct TwoPellResult {
  std::vector<QuadIntegralPoint> points;
  std::size_t skipped_rational = 0;
};

TwoPellResult two_pell_points(std::size_t count);

// Whether q != 0 and both numerator and denominator factor completely over
// `primes`.
bool is_s_unit(const Rational& q, const std::vector<Integer>& primes);

// Quadratic point on the curve X(X+1)Y = 1 attached to a pair of units r, s
// outside `primes`: x has trace T = s - r - 1 and norm r, which makes
// norm(x+1) = 1 + T + r = s, and y = 1/(x(x+1)) has norm 1/(rs). Verifies
// x(x+1)y = 1 and the norm identities exactly in Q[t]/(t^2 - T t + r), and
// that y's denominators stay inside the allowed primes. Returns nullopt when
// T^2 - 4r is a perfect square (the point would be rational, not quadratic).
// Throws NotAnSUnitError when r or s fails the factorization test.
std::optional<QuadIntegralPoint> ex13_point(const Rational& r, const Rational& s,
                                            const std::vector<Integer>& primes);

// A point of the projective line over Q: either a rational value or the
// point at infinity.
struct ProjValue {
  bool infinite = false;
  Rational value;

  static ProjValue inf() { return {true, Rational(0)}; }
  static ProjValue of(Rational v) { return {false, std::move(v)}; }

  friend bool operator==(const ProjValue& a, const ProjValue& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

// Verdict on four projective images: how many distinct values, the grouping
// by equal value, and — in the balanced two-value case — the sign vector
// epsilon with +1 on the pair sharing the first value and -1 on the other
// pair (summing to zero). A 3|1 split over two values is flagged as
// unbalanced: fibers of a degree-2 map have at most 2 points, so no such
// input can arise from one.
struct AddendumVerdict {
  std::array<ProjValue, 4> images;
  std::size_t distinct_count = 0;
  std::vector<std::vector<std::size_t>> groups;  // first-appearance order
  bool has_pairing = false;
  bool unbalanced = false;
  std::array<int, 4> epsilons{0, 0, 0, 0};
};

AddendumVerdict addendum_check(const std::array<ProjValue, 4>& images);

}  // namespace degcrit::pell
