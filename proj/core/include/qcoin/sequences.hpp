#pragma once

#include "qcoin/exact.hpp"

namespace qcoin {

// Largest |index| accepted by the integer sequence kernels.
inline constexpr long long kMaxSequenceIndex = 200'000;

// F_1 = F_2 = 1, F_n = F_{n-1} + F_{n-2}; F_0 = 0.
// Negative indices follow F_{-n} = (-1)^{n+1} F_n.
Integer fibonacci(long long n);

// L_0 = 2, L_1 = 1, L_n = L_{n-1} + L_{n-2}; L_{-n} = (-1)^n L_n.
Integer lucas(long long n);

// Generalized Fibonacci for a d-symbol coin:
// D_0 = 0, D_1 = 1, D_M = (d-1)(D_{M-1} + D_{M-2}).
// The binary case d = 2 reduces to fibonacci(M).
Integer qudit_fibonacci(long long alphabet_size, long long index);

// (phi^n - phi'^n) / (phi - phi') evaluated in high-precision floating point.
// Throws std::domain_error when `precision_digits` cannot resolve F_n.
Real binet_evaluate(long long n, unsigned precision_digits = 50);

enum class RatioKind {
  Count,        // F_n / F_{n-1}, converging to the golden ratio
  Probability,  // F_n / (2 F_{n-1}), converging to half the golden ratio
};

// Exact consecutive-term ratio at index n (n >= 3).
Rational ratio_limit(RatioKind kind, long long n);

struct GoldenRatioPair {
  Real phi;        // (1 + sqrt 5) / 2
  Real phi_prime;  // 1 - phi = -1/phi
};

GoldenRatioPair golden_ratio(unsigned precision_digits = 50);

}  // namespace qcoin
