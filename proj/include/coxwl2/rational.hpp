#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coxwl2 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or a finite decimal such as "-0.125". Throws
/// Error("io", "BadRational") on anything else.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Rational power(const Rational& base, long exponent);

inline int sign(const Rational& value) { return sgn(value); }

} // namespace coxwl2
