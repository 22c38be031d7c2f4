#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace itres {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "-p" or "p/q" with decimal digits; the result is canonical.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Generalised binomial: n may be negative.
Integer binomial(long n, unsigned long k);
Integer factorial(unsigned long n);
Rational pow(const Rational& base, unsigned long exponent);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace itres
