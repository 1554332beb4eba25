#include "qcoin/sequences.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcoin {

namespace {

constexpr double kLog10Phi = 0.20898764024997873;

void require_index(long long n) {
  if (n > kMaxSequenceIndex || n < -kMaxSequenceIndex)
    throw std::out_of_range("sequence index " + std::to_string(n) +
                            " beyond limit " +
                            std::to_string(kMaxSequenceIndex));
}

Integer fibonacci_nonneg(long long n) {
  Integer a = 0, b = 1;  // F_0, F_1
  for (long long i = 0; i < n; ++i) {
    Integer next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

Integer lucas_nonneg(long long n) {
  Integer a = 2, b = 1;  // L_0, L_1
  for (long long i = 0; i < n; ++i) {
    Integer next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

}  // namespace

Integer fibonacci(long long n) {
  require_index(n);
  if (n >= 0) return fibonacci_nonneg(n);
  Integer f = fibonacci_nonneg(-n);
  return ((-n) % 2 == 0) ? -f : f;  // F_{-n} = (-1)^{n+1} F_n
}

Integer lucas(long long n) {
  require_index(n);
  if (n >= 0) return lucas_nonneg(n);
  Integer l = lucas_nonneg(-n);
  return ((-n) % 2 == 0) ? l : -l;  // L_{-n} = (-1)^n L_n
}

Integer qudit_fibonacci(long long alphabet_size, long long index) {
  if (alphabet_size < 2)
    throw std::domain_error("alphabet size must be at least 2");
  if (index < 0) throw std::domain_error("qudit sequence index must be >= 0");
  require_index(index);

  if (index == 0) return 0;
  const Integer coeff = alphabet_size - 1;
  Integer a = 0, b = 1;  // D_0, D_1
  for (long long i = 1; i < index; ++i) {
    Integer next = coeff * (a + b);
    a = std::move(b);
    b = std::move(next);
  }
  return b;
}

Real binet_evaluate(long long n, unsigned precision_digits) {
  if (n < 0) throw std::domain_error("binet_evaluate requires n >= 0");
  require_index(n);
  if (precision_digits < 15)
    throw std::invalid_argument("precision must be at least 15 digits");
  if (double(precision_digits) <= double(n) * kLog10Phi + 2.0)
    throw std::domain_error("precision " + std::to_string(precision_digits) +
                            " digits insufficient for F_" + std::to_string(n));

  const unsigned working_digits = precision_digits + 10;
  const mpfr_prec_t bits =
      static_cast<mpfr_prec_t>(std::ceil(working_digits * 3.3219280948873623)) + 8;

  mpfr_t sqrt5, phi, phi_prime, num, tmp;
  mpfr_inits2(bits, sqrt5, phi, phi_prime, num, tmp, nullptr);
  mpfr_sqrt_ui(sqrt5, 5, MPFR_RNDN);
  mpfr_add_ui(phi, sqrt5, 1, MPFR_RNDN);
  mpfr_div_ui(phi, phi, 2, MPFR_RNDN);
  mpfr_ui_sub(phi_prime, 1, phi, MPFR_RNDN);

  mpfr_pow_si(num, phi, n, MPFR_RNDN);
  mpfr_pow_si(tmp, phi_prime, n, MPFR_RNDN);
  mpfr_sub(num, num, tmp, MPFR_RNDN);
  mpfr_div(num, num, sqrt5, MPFR_RNDN);

  Real out(0, working_digits);
  mpfr_set(out.backend().data(), num, MPFR_RNDN);
  mpfr_clears(sqrt5, phi, phi_prime, num, tmp, nullptr);
  return out;
}

Rational ratio_limit(RatioKind kind, long long n) {
  if (n < 3) throw std::out_of_range("ratio_limit requires n >= 3");
  require_index(n);

  Integer previous = fibonacci(n - 1);
  Integer current = fibonacci(n);
  switch (kind) {
    case RatioKind::Count:
      return Rational(current, previous);
    case RatioKind::Probability:
      return Rational(current, 2 * previous);
  }
  throw std::invalid_argument("unknown ratio kind");
}

GoldenRatioPair golden_ratio(unsigned precision_digits) {
  const mpfr_prec_t bits =
      static_cast<mpfr_prec_t>(std::ceil(precision_digits * 3.3219280948873623)) + 8;
  mpfr_t sqrt5, phi;
  mpfr_inits2(bits, sqrt5, phi, nullptr);
  mpfr_sqrt_ui(sqrt5, 5, MPFR_RNDN);
  mpfr_add_ui(phi, sqrt5, 1, MPFR_RNDN);
  mpfr_div_ui(phi, phi, 2, MPFR_RNDN);

  GoldenRatioPair pair{Real(0, precision_digits), Real(0, precision_digits)};
  mpfr_set(pair.phi.backend().data(), phi, MPFR_RNDN);
  mpfr_ui_sub(phi, 1, phi, MPFR_RNDN);  // phi' = 1 - phi
  mpfr_set(pair.phi_prime.backend().data(), phi, MPFR_RNDN);
  mpfr_clears(sqrt5, phi, nullptr);
  return pair;
}

}  // namespace qcoin
