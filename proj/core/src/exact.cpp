#include "qcoin/exact.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <cmath>
#include <cstring>
#include <iomanip>
#include <sstream>

namespace qcoin {

namespace {

mpfr_prec_t bits_for_digits(unsigned digits10) {
  return static_cast<mpfr_prec_t>(std::ceil(digits10 * 3.3219280948873623)) + 8;
}

void set_from_integer(mpfr_t out, const Integer& n) {
  mpfr_set_str(out, n.str().c_str(), 10, MPFR_RNDN);
}

}  // namespace

Integer ipow(const Integer& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

std::string rational_pair_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string decimal_string(const Rational& r, int significant_digits) {
  return decimal_string(to_real(r, unsigned(significant_digits) + 10),
                        significant_digits);
}

std::string decimal_string(const Real& x, int significant_digits) {
  std::ostringstream os;
  os << std::setprecision(significant_digits) << x;
  return os.str();
}

Real to_real(const Rational& r, unsigned digits10) {
  const mpfr_prec_t bits = bits_for_digits(digits10);
  mpfr_t num, den;
  mpfr_init2(num, bits);
  mpfr_init2(den, bits);
  set_from_integer(num, numerator(r));
  set_from_integer(den, denominator(r));
  mpfr_div(num, num, den, MPFR_RNDN);

  Real out(0, digits10);
  mpfr_set(out.backend().data(), num, MPFR_RNDN);
  mpfr_clear(num);
  mpfr_clear(den);
  return out;
}

Real to_real(const Integer& n, unsigned digits10) {
  Real out(0, digits10);
  mpfr_set_str(out.backend().data(), n.str().c_str(), 10, MPFR_RNDN);
  return out;
}

Integer round_to_integer(const Real& x) {
  const mpfr_srcptr src = x.backend().data();
  mpfr_t rounded;
  mpfr_init2(rounded, mpfr_get_prec(src));
  mpfr_rint(rounded, src, MPFR_RNDN);

  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, rounded, MPFR_RNDN);
  char* digits = mpz_get_str(nullptr, 10, z);
  Integer out(digits);

  void (*free_fn)(void*, std::size_t);
  mp_get_memory_functions(nullptr, nullptr, &free_fn);
  free_fn(digits, std::strlen(digits) + 1);
  mpz_clear(z);
  mpfr_clear(rounded);
  return out;
}

}  // namespace qcoin
