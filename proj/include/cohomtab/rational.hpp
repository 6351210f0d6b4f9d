#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cohomtab {

// Exact rational in canonical form (denominator > 0, lowest terms).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p" (optional leading sign). Throws ParseError on
// malformed input or a zero denominator; the result is canonicalized.
Rational parse_rational(std::string_view text);

// Always "p/q" unless `pretty` is set, in which case integers drop "/1".
std::string format_rational(const Rational& value, bool pretty = false);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace cohomtab
