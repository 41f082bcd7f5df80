#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace polar {

// Exact scalars. mpq_class canonicalizes after every arithmetic operation,
// so values are always in lowest terms with a positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;

// base^exponent for any integer exponent; base must be nonzero when exponent < 0.
Rational pow(const Rational& base, long exponent);

inline Rational pow(long base, long exponent) { return pow(Rational(base), exponent); }

// "num/den", or "num" when the value is an integer.
std::string to_string(const Rational& value);

// Parses "a", "-a" or "a/b"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

inline int sign(const Rational& value) { return sgn(value); }

// Largest integer not exceeding value.
Integer floor(const Rational& value);

// Value rounded to double, for diagnostics only.
inline double approx(const Rational& value) { return value.get_d(); }

}  // namespace polar
