#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace degcrit {

// Exact arithmetic backbone. Every quantity the library reasons about is an
// unbounded integer or rational; floating point appears only in display
// helpers, never in a comparison or a verdict.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Builds num/den in lowest terms with a positive denominator. Accepts a
// negative denominator (the sign moves to the numerator); throws
// PreconditionError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Parses "p" or "p/q" with an optional leading sign on either part.
// Whitespace around the token is accepted; anything else throws SyntaxError.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& value);
// Renders in lowest terms, "p/q" or plain "p" when q == 1.
std::string to_string(const Rational& value);

// Largest integer <= value (true floor, also for negatives).
Integer floor_div(const Integer& num, const Integer& den);
Integer floor_rational(const Rational& value);

// Exact integer square root floor(sqrt(n)); throws PreconditionError for
// n < 0.
Integer isqrt(const Integer& n);

bool is_perfect_square(const Integer& n);
bool is_perfect_square(const Integer& n, Integer& root);
// Whether a rational is the square of a rational (0 counts).
bool is_perfect_square(const Rational& q);
bool is_perfect_square(const Rational& q, Rational& root);

// Decomposition n = square_root^2 * radicand with radicand square-free.
// Exact for every n < 10^18: trial division covers primes up to 10^6 and the
// remaining cofactor is either 1, a prime, a prime square (detected by the
// perfect-square check) or a product of two distinct primes — all of which
// are handled exactly at that size. Throws PreconditionError for n < 0.
struct SquareFreeParts {
  Integer square_root;  // the extracted square factor's root
  Integer radicand;     // square-free remainder
};
SquareFreeParts square_free_decompose(const Integer& n);

}  // namespace degcrit
