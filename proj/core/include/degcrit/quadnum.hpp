#pragma once

#include "degcrit/numeric.hpp"

#include <string>
#include <vector>

namespace degcrit {

// Number of the form a + b*sqrt(m) with a, b rational and m a non-negative
// integer. Canonical form: m is square-free, and whenever the value is
// actually rational (b == 0 or m in {0, 1}) it is stored with b == 0, m == 0.
// Canonicalisation makes structural equality coincide with numeric equality.
class QuadNum {
 public:
  QuadNum() : a_(0), b_(0), m_(0) {}
  // Rationals embed; intentionally implicit so mixed arithmetic reads well.
  QuadNum(const Rational& value) : a_(value), b_(0), m_(0) {}
  QuadNum(const Integer& value) : a_(value), b_(0), m_(0) {}
  QuadNum(int value) : a_(value), b_(0), m_(0) {}
  QuadNum(const Rational& a, const Rational& b, const Integer& radicand);

  // Exact square root of a non-negative rational; throws PreconditionError
  // on negative input.
  static QuadNum sqrt_of(const Rational& value);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coeff() const { return b_; }
  const Integer& radicand() const { return m_; }
  bool is_rational() const { return b_ == 0; }
  // Valid only when is_rational().
  const Rational& as_rational() const;

  // -1, 0 or +1; exact (resolves a + b*sqrt(m) with mixed-sign a, b by
  // comparing a^2 against b^2 m).
  int sign() const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  // Galois conjugate a - b*sqrt(m).
  QuadNum conjugate() const;
  // a^2 - b^2 m, the product with the conjugate; always rational.
  Rational field_norm() const;

  QuadNum operator-() const;
  QuadNum& operator+=(const QuadNum& rhs);
  QuadNum& operator-=(const QuadNum& rhs);
  QuadNum& operator*=(const QuadNum& rhs);
  // Division by zero throws PreconditionError.
  QuadNum& operator/=(const QuadNum& rhs);

  friend QuadNum operator+(QuadNum lhs, const QuadNum& rhs) { return lhs += rhs; }
  friend QuadNum operator-(QuadNum lhs, const QuadNum& rhs) { return lhs -= rhs; }
  friend QuadNum operator*(QuadNum lhs, const QuadNum& rhs) { return lhs *= rhs; }
  friend QuadNum operator/(QuadNum lhs, const QuadNum& rhs) { return lhs /= rhs; }

  // Canonical form makes this numeric equality as well.
  friend bool operator==(const QuadNum& lhs, const QuadNum& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.m_ == rhs.m_;
  }
  friend bool operator!=(const QuadNum& lhs, const QuadNum& rhs) {
    return !(lhs == rhs);
  }

 private:
  void canonicalize();
  // Cheap tail of canonicalize for ring operations between already-canonical
  // values: their shared radicand is square-free, so only the collapse of a
  // vanished radical part can apply.
  void collapse_rational();
  Rational a_;
  Rational b_;
  Integer m_;
};

// Three-way comparison (-1 / 0 / +1 for x < y / x == y / x > y). Throws
// MixedRadicandsError when the two values live in genuinely different radical
// extensions (both irrational with different radicands).
int compare(const QuadNum& x, const QuadNum& y);
bool less(const QuadNum& x, const QuadNum& y);

// Result of solving a2*t^2 + a1*t + a0 = 0 exactly over the reals.
enum class RootKind {
  TwoReal,           // distinct real roots, ascending
  DoubleRoot,        // one repeated root, stored once
  Linear,            // a2 == 0, a1 != 0: the single root
  NoReal,            // negative discriminant, or a2 == a1 == 0 with a0 != 0
  DegenerateAllZero  // all coefficients zero: every t solves it
};

struct QuadRoots {
  RootKind kind = RootKind::NoReal;
  std::vector<QuadNum> roots;  // ascending; empty for NoReal / DegenerateAllZero
};

QuadRoots quad_roots(const Rational& a2, const Rational& a1, const Rational& a0);

// Smallest strictly positive root out of a QuadRoots. Throws NoRealRootError
// (no real roots, including the all-zero degenerate case) or
// NoPositiveRootError (real roots exist but none is > 0).
QuadNum min_positive_root(const QuadRoots& roots);

// a2*x^2 + a1*x + a0 evaluated exactly.
QuadNum eval_quadratic(const Rational& a2, const Rational& a1,
                       const Rational& a0, const QuadNum& x);

// "45/16", "7 - sqrt(21)", "-182 + 42*sqrt(21)", ...
std::string to_exact_string(const QuadNum& x);
// Display-only decimal approximation (default 12 significant digits); never
// used in any comparison inside the library.
std::string to_decimal_string(const QuadNum& x, int significant_digits = 12);

}  // namespace degcrit
