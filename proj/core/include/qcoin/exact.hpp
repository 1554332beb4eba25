#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace qcoin {

// Arbitrary-precision signed integer in canonical sign/magnitude form.
// Round-trips losslessly through decimal strings (no digit grouping,
// leading '-' for negatives).
using Integer = boost::multiprecision::cpp_int;

// Arbitrary-precision fraction, always fully reduced with a positive
// denominator.
using Rational = boost::multiprecision::cpp_rational;

// Arbitrary-precision real. Every value carries its own mpfr precision,
// so results stay valid regardless of the process-wide default.
using Real = boost::multiprecision::mpfr_float;

// Thrown when an enumeration or dimension budget would be exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Integer pow2(unsigned n) { return Integer(1) << n; }

Integer ipow(const Integer& base, unsigned exp);

// "numerator/denominator", always with the slash ("0/1", "5/64", ...).
std::string rational_pair_string(const Rational& r);

// Decimal rendering at the given number of significant digits.
std::string decimal_string(const Rational& r, int significant_digits = 12);
std::string decimal_string(const Real& x, int significant_digits = 12);

// Exact conversions into a Real of the requested decimal precision.
Real to_real(const Rational& r, unsigned digits10);
Real to_real(const Integer& n, unsigned digits10);

// Round-to-nearest integer, carried out at the value's own precision.
Integer round_to_integer(const Real& x);

}  // namespace qcoin
