#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace invforge {

// GMP rationals are kept canonical by every arithmetic operation; values built
// from strings must go through parse_rational.
using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p" or "p/q" with an optional sign on p. Throws ParseError.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace invforge
