#pragma once

#include <gmpxx.h>

#include <string>

namespace hilbcm {

// Exact rational scalar. GMP keeps values canonical (gcd-reduced,
// positive denominator, zero stored as 0/1) through arithmetic.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" with optional surrounding whitespace.
// Throws ParseError on anything else; q = 0 is rejected.
Rational parse_rational(const std::string& text);

// Canonical text form: integer when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& q);

double rational_to_double(const Rational& q);

}  // namespace hilbcm
