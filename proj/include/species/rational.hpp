#pragma once

#include <gmpxx.h>

#include <string>

namespace species {

// Exact coefficients. Arithmetic results are canonical (den > 0, reduced);
// the two-argument constructor is not, so library code never uses it.
using Rational = mpq_class;

// "num/den", always with an explicit denominator.
std::string to_string(const Rational& q);

// Accepts "n", "n/d" with optional leading '-'. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

Rational factorial(unsigned n);

}  // namespace species
