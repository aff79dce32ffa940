#pragma once

#include <stdexcept>
#include <string>

namespace degcrit {

// Root of the library's error hierarchy. Everything thrown deliberately by
// degcrit derives from this, so callers can catch one type at the boundary.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- input / document errors -------------------------------------------------

// Document is not well-formed (bad JSON, wrong value type, unknown key, ...).
class SyntaxError : public Error {
 public:
  using Error::Error;
};

// Document parses but the arrays have inconsistent sizes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Intersection matrix is not symmetric.
class AsymmetricMatrixError : public Error {
 public:
  using Error::Error;
};

// A multiplicity p_i is zero or negative.
class NonPositiveMultiplicityError : public Error {
 public:
  using Error::Error;
};

// A filtration document violates the chain conditions (containment, ambient
// dimension agreement, malformed vectors).
class MalformedFiltrationError : public Error {
 public:
  using Error::Error;
};

// --- arithmetic errors -------------------------------------------------------

// Two quadratic numbers live in different radical extensions and cannot be
// combined or compared exactly.
class MixedRadicandsError : public Error {
 public:
  using Error::Error;
};

// A quadratic has real roots but none of them is positive.
class NoPositiveRootError : public Error {
 public:
  using Error::Error;
};

// A quadratic has no real root at all.
class NoRealRootError : public Error {
 public:
  using Error::Error;
};

// --- analysis errors ---------------------------------------------------------

// The intersection data cannot come from the asserted geometric situation
// (e.g. it fails the signature screen for big-and-nef divisors).
class InconsistentDataError : public Error {
 public:
  using Error::Error;
};

// No rational parameter window could be certified for a divisor.
class NoWindowFoundError : public Error {
 public:
  using Error::Error;
};

// A caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A combinatorial demand cannot be met (capacities sum below the demand).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// An input that must be a unit outside the configured prime set is not one.
class NotAnSUnitError : public Error {
 public:
  using Error::Error;
};

}  // namespace degcrit
