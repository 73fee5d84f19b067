#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mmatch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Always "p/q", including integers ("1/1") so the field shape is stable.
std::string to_fraction_string(const Rational& value);

// Decimal rendering with the given number of significant digits. Accurate for
// rationals whose numerator and denominator far exceed double range.
std::string to_decimal_string(const Rational& value, int significant_digits);

double to_double(const Rational& value);
double to_double(const BigInt& value);

BigInt factorial(unsigned n);

}  // namespace mmatch
