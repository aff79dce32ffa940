#include "degcrit/numeric.hpp"

#include "degcrit/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <limits>
#include <sstream>
#include <vector>

namespace degcrit {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw PreconditionError("make_rational: zero denominator");
  }
  if (den < 0) {
    return Rational(-num, -den);
  }
  return Rational(num, den);
}

namespace {

bool parse_integer_token(const std::string& tok, Integer& out) {
  if (tok.empty()) return false;
  std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (start == tok.size()) return false;
  for (std::size_t i = start; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  }
  // The big-int constructor rejects an explicit '+', so strip it here.
  out = Integer(tok[0] == '+' ? tok.substr(1) : tok);
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t lo = 0;
  std::size_t hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  const std::string body = text.substr(lo, hi - lo);
  if (body.empty()) {
    throw SyntaxError("parse_rational: empty token");
  }
  const std::size_t slash = body.find('/');
  if (slash == std::string::npos) {
    Integer n;
    if (!parse_integer_token(body, n)) {
      throw SyntaxError("parse_rational: not an integer or fraction: \"" + text + "\"");
    }
    return Rational(n);
  }
  if (body.find('/', slash + 1) != std::string::npos) {
    throw SyntaxError("parse_rational: more than one '/': \"" + text + "\"");
  }
  Integer num, den;
  if (!parse_integer_token(body.substr(0, slash), num) ||
      !parse_integer_token(body.substr(slash + 1), den)) {
    throw SyntaxError("parse_rational: not an integer or fraction: \"" + text + "\"");
  }
  if (den == 0) {
    throw SyntaxError("parse_rational: zero denominator: \"" + text + "\"");
  }
  return make_rational(num, den);
}

std::string to_string(const Integer& value) {
  return value.str();
}

std::string to_string(const Rational& value) {
  std::ostringstream os;
  os << value;  // cpp_rational streams as "p/q", or "p" when q == 1
  return os.str();
}

Integer floor_div(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw PreconditionError("floor_div: zero denominator");
  }
  Integer q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  // divide_qr truncates toward zero; shift down when the remainder has the
  // opposite sign of the divisor.
  if (r != 0 && ((r < 0) != (den < 0))) {
    --q;
  }
  return q;
}

Integer floor_rational(const Rational& value) {
  return floor_div(numerator(value), denominator(value));
}

Integer isqrt(const Integer& n) {
  if (n < 0) {
    throw PreconditionError("isqrt: negative argument");
  }
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Integer& n, Integer& root) {
  if (n < 0) return false;
  const Integer r = isqrt(n);
  if (r * r == n) {
    root = r;
    return true;
  }
  return false;
}

bool is_perfect_square(const Integer& n) {
  Integer ignored;
  return is_perfect_square(n, ignored);
}

bool is_perfect_square(const Rational& q, Rational& root) {
  if (q < 0) return false;
  Integer rn, rd;
  if (!is_perfect_square(numerator(q), rn)) return false;
  if (!is_perfect_square(denominator(q), rd)) return false;
  root = Rational(rn, rd);
  return true;
}

bool is_perfect_square(const Rational& q) {
  Rational ignored;
  return is_perfect_square(q, ignored);
}

namespace {

// Odd primes below 10^6, sieved once on first use.
const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 1'000'000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 3; p <= limit; p += 2) {
      if (composite[p]) continue;
      out.push_back(p);
      for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= limit; q += 2ull * p) {
        composite[static_cast<std::uint32_t>(q)] = true;
      }
    }
    return out;
  }();
  return primes;
}

}  // namespace

SquareFreeParts square_free_decompose(const Integer& n) {
  if (n < 0) {
    throw PreconditionError("square_free_decompose: negative argument");
  }
  if (n == 0) return {Integer(1), Integer(0)};
  Integer rest = n;
  Integer square_root = 1;
  Integer radicand = 1;

  const auto strip = [&](const Integer& p) {
    unsigned exp = 0;
    while (rest % p == 0) {
      rest /= p;
      ++exp;
    }
    if (exp == 0) return;
    for (unsigned i = 0; i + 1 < exp; i += 2) square_root *= p;
    if (exp % 2 == 1) radicand *= p;
  };

  strip(Integer(2));
  if (rest <= std::numeric_limits<std::uint64_t>::max()) {
    // Fast path: once the cofactor fits a machine word, native division is
    // several times cheaper than big-integer modulo across the prime table.
    std::uint64_t rest64 = static_cast<std::uint64_t>(rest);
    for (const std::uint32_t p : small_primes()) {
      if (static_cast<std::uint64_t>(p) * p > rest64) break;
      unsigned exp = 0;
      while (rest64 % p == 0) {
        rest64 /= p;
        ++exp;
      }
      if (exp == 0) continue;
      for (unsigned i = 0; i + 1 < exp; i += 2) square_root *= p;
      if (exp % 2 == 1) radicand *= p;
    }
    rest = rest64;
  } else {
    for (const std::uint32_t p : small_primes()) {
      if (Integer(p) * p > rest) break;
      strip(Integer(p));
    }
  }
  if (rest > 1) {
    // Cofactor after trial division to 10^6: within the documented size
    // contract it is prime, a prime square, or a product of two distinct
    // primes; only the square contributes to square_root.
    Integer r;
    if (is_perfect_square(rest, r)) {
      square_root *= r;
    } else {
      radicand *= rest;
    }
  }
  return {square_root, radicand};
}

}  // namespace degcrit
