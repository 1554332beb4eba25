#pragma once

#include "qcoin/check.hpp"
#include "qcoin/exact.hpp"
#include "qcoin/pattern_count.hpp"

#include <vector>

namespace qcoin {

// A d-sided coin. Only the probability of the distinguished symbol "1"
// matters for the duplicated-pair events; a full bias profile can be given
// for simulation and must then be consistent with p_one.
struct CoinModel {
  int outcome_count = 2;
  Rational p_one = Rational(1, 2);
  std::vector<Rational> bias_profile;  // empty: remaining mass spread uniformly

  static CoinModel fair_binary();
  static CoinModel uniform(int outcome_count);
  static CoinModel biased_binary(Rational p_one);

  // Probability of symbol s under this model.
  Rational symbol_probability(int symbol) const;
};

void validate(const CoinModel& model);

// P_n = F_{n-1} / 2^n, the fair-coin probability of ending on the only "11".
Rational prob_end(int length);

// P_{n,k} = F_k F_{n-k} / 2^n. Also recomputes the Lucas closed form
// (L_n - (-1)^k L_{n-2k}) / (5 * 2^n) and insists the two agree.
Rational prob_position(int length, int pair_position);

// (n L_n - F_n) / (5 * 2^n): the pair lands somewhere, exactly once.
Rational prob_anywhere_once(int length);

// count_partitioned(spec) / 2^total_length. Binary alphabet only.
Rational prob_partitioned(const PatternSpec& spec);

// P_M = D_{M-1} / d^M for the uniform d-sided coin.
Rational prob_qudit_end(int alphabet_size, int trials);

// Biased-coin recursion P_2 = p^2, P_3 = p^2(1-p),
// P_M = (1-p)(P_{M-1} + p P_{M-2}), exact in rationals.
Rational prob_generic_coin(const Rational& p_one, int trials);
Rational prob_generic_coin(const CoinModel& model, int trials);

// Closed-form probability for any spec the closed-form counts cover.
Rational probability_for(const PatternSpec& spec);

// Checks P_n = (1/2) P_{n-1} + (1/4) P_{n-2} exactly for 3 <= n <= n_max,
// seeded with P_1 = 0, P_2 = 1/4. One item per n.
CheckReport prob_end_recursion_check(int n_max);

// Checks P_2 = d^-2, P_3 = d^-2 - d^-3 and
// P_{M+1} = (1 - 1/d)(P_M + (1/d) P_{M-1}) exactly up to m_max.
CheckReport qudit_recursion_check(int alphabet_size, int m_max);

// Enumeration reference for the biased coin: sums p^ones (1-p)^zeros over
// every indicator string of the given length whose single adjacent pair of
// ones sits where the placement demands. Exponential in length; throws
// ResourceError past 2^24 strings.
Rational weighted_event_oracle(const Rational& p_one, int length,
                               Placement placement, int pair_position = 0);

}  // namespace qcoin
