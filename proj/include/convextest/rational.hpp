#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace convextest {

// Exact arithmetic everywhere a decision is made; floats only for reporting
// and for the conservative filters in interval.hpp.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

// b^e for rationals. boost::multiprecision does not define pow() for the
// rational adaptor, so do the square-and-multiply by hand.
inline Rational pow_rational(Rational base, unsigned long exp) {
  Rational result(1);
  while (exp != 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

inline BigInt pow_bigint(BigInt base, unsigned long exp) {
  BigInt result(1);
  while (exp != 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

inline BigInt floor_rational(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);  // den > 0 canonical
  BigInt quot = num / den;                          // truncates toward zero
  if (num < 0 && quot * den != num) --quot;
  return quot;
}

inline BigInt ceil_rational(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);
  BigInt quot = num / den;
  if (num > 0 && quot * den != num) ++quot;
  return quot;
}

// Doubles bracketing an exact rational. Conversion via mpq_get_d is within
// one ulp of the true value, so widening the converted value by one ulp on
// each side gives a guaranteed enclosure.
double rational_to_double(const Rational& q);
void rational_to_interval(const Rational& q, double& lo, double& hi);

// Canonical text form: "p/q" reduced, or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

// Accepts "p/q" (q > 0 after sign normalization) and decimal strings like
// "-12.5" or "0.125". Throws std::invalid_argument with a description.
Rational parse_rational(const std::string& text);

}  // namespace convextest
