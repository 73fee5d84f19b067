#include "mmatch/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <iomanip>
#include <sstream>

namespace mmatch {

namespace {
using Wide = boost::multiprecision::cpp_bin_float_50;

Wide widen(const Rational& value) {
  return Wide(boost::multiprecision::numerator(value)) /
         Wide(boost::multiprecision::denominator(value));
}
}  // namespace

std::string to_fraction_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

std::string to_decimal_string(const Rational& value, int significant_digits) {
  std::ostringstream out;
  out << std::setprecision(significant_digits) << widen(value);
  return out.str();
}

double to_double(const Rational& value) {
  return widen(value).convert_to<double>();
}

double to_double(const BigInt& value) { return value.convert_to<double>(); }

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace mmatch
