#pragma once

#include <gmpxx.h>

#include <string>

namespace jmexpand {

// All coefficients in this library are exact: arbitrary-precision integers
// for expansions and tables, rationals for series and the deformed setting.
using Int = mpz_class;
using Rat = mpq_class;

/// binom(n, k); zero outside the triangle.
Int binomial(long n, long k);

Int factorial(long n);

/// base^exp for non-negative exp.
Int int_pow(unsigned long base, unsigned long exp);

std::string to_decimal(const Int& v);

/// "p" or "p/q", canonical form.
std::string to_decimal(const Rat& v);

/// Parses "7", "-3/4", ... Throws InvalidInputError on malformed text or a
/// zero denominator.
Rat parse_rational(const std::string& text);

}  // namespace jmexpand
