#include "degcrit/quadnum.hpp"

#include "degcrit/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <sstream>

namespace degcrit {

QuadNum::QuadNum(const Rational& a, const Rational& b, const Integer& radicand)
    : a_(a), b_(b), m_(radicand) {
  canonicalize();
}

void QuadNum::canonicalize() {
  if (m_ < 0) {
    throw PreconditionError("QuadNum: negative radicand");
  }
  if (b_ == 0 || m_ == 0) {
    b_ = 0;
    m_ = 0;
    return;
  }
  const SquareFreeParts parts = square_free_decompose(m_);
  if (parts.square_root != 1) {
    b_ *= Rational(parts.square_root);
    m_ = parts.radicand;
  }
  if (m_ == 1) {  // sqrt(1): fold into the rational part
    a_ += b_;
    b_ = 0;
    m_ = 0;
  }
}

void QuadNum::collapse_rational() {
  if (b_ == 0 || m_ == 0) {
    b_ = 0;
    m_ = 0;
  }
}

QuadNum QuadNum::sqrt_of(const Rational& value) {
  if (value < 0) {
    throw PreconditionError("QuadNum::sqrt_of: negative argument");
  }
  if (value == 0) return QuadNum();
  // sqrt(p/q) = sqrt(p*q) / q
  const Integer n = numerator(value) * denominator(value);
  return QuadNum(Rational(0), Rational(1, denominator(value)), n);
}

const Rational& QuadNum::as_rational() const {
  if (!is_rational()) {
    throw PreconditionError("QuadNum::as_rational: value is irrational: " +
                            to_exact_string(*this));
  }
  return a_;
}

int QuadNum::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: a + b*sqrt(m) has the sign of whichever magnitude wins,
  // i.e. compare a^2 with b^2 m. Equality would force sqrt(m) rational,
  // impossible here (m square-free, m >= 2, b != 0).
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(m_);
  if (lhs == rhs) {
    throw Error("QuadNum::sign: non-canonical state (rational radical)");
  }
  return lhs > rhs ? sa : sb;
}

QuadNum QuadNum::conjugate() const {
  QuadNum out(*this);
  out.b_ = -out.b_;
  return out;
}

Rational QuadNum::field_norm() const {
  return a_ * a_ - b_ * b_ * Rational(m_);
}

QuadNum QuadNum::operator-() const {
  QuadNum out(*this);
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

namespace {

// Radicand both operands must agree on; 0 (rational) is compatible with
// everything.
Integer joint_radicand(const QuadNum& x, const QuadNum& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational()) return x.radicand();
  if (x.radicand() != y.radicand()) {
    throw MixedRadicandsError("cannot combine sqrt(" + to_string(x.radicand()) +
                              ") with sqrt(" + to_string(y.radicand()) + ")");
  }
  return x.radicand();
}

}  // namespace

QuadNum& QuadNum::operator+=(const QuadNum& rhs) {
  const Integer m = joint_radicand(*this, rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  m_ = m;
  collapse_rational();
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& rhs) {
  return *this += -rhs;
}

QuadNum& QuadNum::operator*=(const QuadNum& rhs) {
  const Integer m = joint_radicand(*this, rhs);
  const Rational ra = a_ * rhs.a_ + b_ * rhs.b_ * Rational(m);
  const Rational rb = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = ra;
  b_ = rb;
  m_ = m;
  collapse_rational();
  return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& rhs) {
  if (rhs.is_zero()) {
    throw PreconditionError("QuadNum: division by zero");
  }
  if (rhs.is_rational()) {
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    collapse_rational();
    return *this;
  }
  // 1/(a + b sqrt(m)) = (a - b sqrt(m)) / (a^2 - b^2 m); the norm is nonzero
  // because sqrt(m) is irrational.
  const Rational norm = rhs.field_norm();
  *this *= rhs.conjugate();
  a_ /= norm;
  b_ /= norm;
  collapse_rational();
  return *this;
}

int compare(const QuadNum& x, const QuadNum& y) {
  QuadNum diff = x;
  diff -= y;  // throws MixedRadicandsError when incompatible
  return diff.sign();
}

bool less(const QuadNum& x, const QuadNum& y) {
  return compare(x, y) < 0;
}

QuadRoots quad_roots(const Rational& a2, const Rational& a1, const Rational& a0) {
  QuadRoots out;
  if (a2 == 0) {
    if (a1 == 0) {
      out.kind = (a0 == 0) ? RootKind::DegenerateAllZero : RootKind::NoReal;
      return out;
    }
    out.kind = RootKind::Linear;
    out.roots.push_back(QuadNum(-a0 / a1));
    return out;
  }
  const Rational disc = a1 * a1 - 4 * a2 * a0;
  if (disc < 0) {
    out.kind = RootKind::NoReal;
    return out;
  }
  if (disc == 0) {
    out.kind = RootKind::DoubleRoot;
    out.roots.push_back(QuadNum(-a1 / (2 * a2)));
    return out;
  }
  out.kind = RootKind::TwoReal;
  const QuadNum s = QuadNum::sqrt_of(disc);
  const QuadNum twice_a2 = QuadNum(2 * a2);
  QuadNum r1 = (QuadNum(-a1) - s) / twice_a2;
  QuadNum r2 = (QuadNum(-a1) + s) / twice_a2;
  if (compare(r1, r2) > 0) std::swap(r1, r2);
  out.roots.push_back(r1);
  out.roots.push_back(r2);
  return out;
}

QuadNum min_positive_root(const QuadRoots& roots) {
  switch (roots.kind) {
    case RootKind::NoReal:
      throw NoRealRootError("quadratic has no real root");
    case RootKind::DegenerateAllZero:
      throw NoRealRootError("all-zero quadratic: roots are undetermined");
    default:
      break;
  }
  for (const QuadNum& r : roots.roots) {  // ascending
    if (r.sign() > 0) return r;
  }
  throw NoPositiveRootError("quadratic has real roots but none is positive");
}

QuadNum eval_quadratic(const Rational& a2, const Rational& a1,
                       const Rational& a0, const QuadNum& x) {
  return QuadNum(a2) * x * x + QuadNum(a1) * x + QuadNum(a0);
}

std::string to_exact_string(const QuadNum& x) {
  if (x.is_rational()) return to_string(x.rational_part());
  const Rational& b = x.radical_coeff();
  const std::string mag = [&]() -> std::string {
    const Rational abs_b = b < 0 ? Rational(-b) : b;
    if (abs_b == 1) return "sqrt(" + to_string(x.radicand()) + ")";
    return to_string(abs_b) + "*sqrt(" + to_string(x.radicand()) + ")";
  }();
  if (x.rational_part() == 0) {
    return (b < 0 ? "-" : "") + mag;
  }
  return to_string(x.rational_part()) + (b < 0 ? " - " : " + ") + mag;
}

std::string to_decimal_string(const QuadNum& x, int significant_digits) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  const Float value = Float(x.rational_part()) +
                      Float(x.radical_coeff()) * sqrt(Float(x.radicand()));
  std::ostringstream os;
  os.precision(significant_digits);
  os << value;
  return os.str();
}

}  // namespace degcrit
