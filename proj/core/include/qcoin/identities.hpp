#pragma once

#include "qcoin/check.hpp"
#include "qcoin/exact.hpp"

#include <span>

namespace qcoin {

// F_{n-1} F_{n+1} - F_n^2 = (-1)^n.
CheckReport check_cassini(int n_max);

// L_n = F_{n-1} + F_{n+1}.
CheckReport check_lucas_fibonacci_link(int n_max);

// 5 F_m F_n = L_{m+n} - (-1)^n L_{m-n} over 1 <= m, n <= max_mn.
CheckReport check_lucas_product(int max_mn);

// sum_k F_k F_{n-k} = (n L_n - F_n)/5, the division exact.
CheckReport check_anywhere_once_sum(int n_max);

// P_n = (1/2) P_{n-1} + (1/4) P_{n-2} up to n_max.
CheckReport check_end_recursion(int n_max);

// P_{M+1} = (1 - 1/d)(P_M + (1/d) P_{M-1}) plus base values, per alphabet.
CheckReport check_qudit_recursion(std::span<const int> alphabet_sizes,
                                  int m_max);

// Biased-coin recursion against the pair-position recurrence (up to
// m_max_exact) and against full enumeration (up to m_max_oracle).
CheckReport check_generic_recursion(std::span<const Rational> p_values,
                                    int m_max_exact, int m_max_oracle);

// |F_n/F_{n-1} - phi| and |P_{n+1}/P_n - phi/2| below tolerance at index n.
CheckReport check_golden_ratio(int n, double tolerance);

}  // namespace qcoin
