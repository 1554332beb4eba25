#include "qcoin/probability.hpp"

#include "qcoin/sequences.hpp"

#include <stdexcept>
#include <string>

namespace qcoin {

namespace {

void require_trials(int trials, int minimum = 2) {
  if (trials < minimum)
    throw std::domain_error("trial count must be at least " +
                            std::to_string(minimum));
}

Rational exact_divide_by_5(const Integer& numerator) {
  Integer quotient, remainder;
  boost::multiprecision::divide_qr(numerator, Integer(5), quotient, remainder);
  if (remainder != 0)
    throw std::logic_error("Lucas-form numerator not divisible by 5");
  return Rational(quotient);
}

}  // namespace

CoinModel CoinModel::fair_binary() { return CoinModel{}; }

CoinModel CoinModel::uniform(int outcome_count) {
  CoinModel model;
  model.outcome_count = outcome_count;
  model.p_one = Rational(1, outcome_count);
  return model;
}

CoinModel CoinModel::biased_binary(Rational p_one) {
  CoinModel model;
  model.p_one = std::move(p_one);
  return model;
}

Rational CoinModel::symbol_probability(int symbol) const {
  if (symbol < 0 || symbol >= outcome_count)
    throw std::out_of_range("symbol out of range");
  if (!bias_profile.empty()) return bias_profile[symbol];
  if (symbol == 1) return p_one;
  return (Rational(1) - p_one) / (outcome_count - 1);
}

void validate(const CoinModel& model) {
  if (model.outcome_count < 2)
    throw std::invalid_argument("coin needs at least two outcomes");
  if (model.p_one < 0 || model.p_one > 1)
    throw std::invalid_argument("p_one must lie in [0, 1]");
  if (!model.bias_profile.empty()) {
    if (model.bias_profile.size() != std::size_t(model.outcome_count))
      throw std::invalid_argument("bias profile length must equal d");
    Rational sum = 0;
    for (const auto& p : model.bias_profile) {
      if (p < 0 || p > 1)
        throw std::invalid_argument("bias profile entries must lie in [0, 1]");
      sum += p;
    }
    if (sum != 1) throw std::invalid_argument("bias profile must sum to 1");
    if (model.bias_profile[1] != model.p_one)
      throw std::invalid_argument("bias profile disagrees with p_one");
  }
}

Rational prob_end(int length) {
  require_trials(length);
  return Rational(fibonacci(length - 1), pow2(unsigned(length)));
}

Rational prob_position(int length, int pair_position) {
  require_trials(length);
  if (pair_position < 1 || pair_position > length - 1)
    throw std::domain_error("pair position must lie in [1, length-1]");

  const Rational direct(fibonacci(pair_position) *
                            fibonacci(length - pair_position),
                        pow2(unsigned(length)));

  // Lucas route: (L_n - (-1)^k L_{n-2k}) / (5 * 2^n).
  Integer lucas_term = lucas(length - 2LL * pair_position);
  if (pair_position % 2 != 0) lucas_term = -lucas_term;
  const Rational lucas_form =
      exact_divide_by_5(lucas(length) - lucas_term) / pow2(unsigned(length));
  if (direct != lucas_form)
    throw std::logic_error("Lucas closed form disagrees with F_k F_{n-k}");
  return direct;
}

Rational prob_anywhere_once(int length) {
  require_trials(length);
  const AllowedCount counted = count_anywhere_once(length);
  return Rational(counted.count, counted.total_outcomes);
}

Rational prob_partitioned(const PatternSpec& spec) {
  const AllowedCount counted = count_partitioned(spec);
  return Rational(counted.count, counted.total_outcomes);
}

Rational prob_qudit_end(int alphabet_size, int trials) {
  if (alphabet_size < 2)
    throw std::domain_error("alphabet size must be at least 2");
  require_trials(trials);
  return Rational(qudit_fibonacci(alphabet_size, trials - 1),
                  ipow(Integer(alphabet_size), unsigned(trials)));
}

Rational prob_generic_coin(const Rational& p_one, int trials) {
  if (p_one < 0 || p_one > 1)
    throw std::invalid_argument("p_one must lie in [0, 1]");
  require_trials(trials);

  const Rational q = Rational(1) - p_one;
  Rational previous = p_one * p_one;  // P_2
  if (trials == 2) return previous;
  Rational current = previous * q;  // P_3
  for (int m = 4; m <= trials; ++m) {
    Rational next = q * (current + p_one * previous);
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

Rational prob_generic_coin(const CoinModel& model, int trials) {
  validate(model);
  return prob_generic_coin(model.p_one, trials);
}

Rational probability_for(const PatternSpec& spec) {
  const AllowedCount counted = closed_form_count(spec);
  return Rational(counted.count, counted.total_outcomes);
}

CheckReport prob_end_recursion_check(int n_max) {
  if (n_max < 3) throw std::domain_error("recursion check needs n_max >= 3");
  CheckReport report{"end-recursion", {}};
  auto p = [](int n) { return n == 1 ? Rational(0) : prob_end(n); };
  for (int n = 3; n <= n_max; ++n) {
    const Rational lhs = p(n);
    const Rational rhs = p(n - 1) / 2 + p(n - 2) / 4;
    report.items.push_back({"n=" + std::to_string(n), lhs == rhs});
  }
  return report;
}

CheckReport qudit_recursion_check(int alphabet_size, int m_max) {
  if (m_max < 3) throw std::domain_error("recursion check needs m_max >= 3");
  CheckReport report{"qudit-recursion d=" + std::to_string(alphabet_size), {}};

  const Rational inv_d(1, alphabet_size);
  report.items.push_back(
      {"P_2 = d^-2", prob_qudit_end(alphabet_size, 2) == inv_d * inv_d});
  report.items.push_back(
      {"P_3 = d^-2 - d^-3",
       prob_qudit_end(alphabet_size, 3) == inv_d * inv_d - inv_d * inv_d * inv_d});

  for (int m = 3; m <= m_max; ++m) {
    const Rational lhs = prob_qudit_end(alphabet_size, m + 1);
    const Rational rhs = (Rational(1) - inv_d) *
                         (prob_qudit_end(alphabet_size, m) +
                          inv_d * prob_qudit_end(alphabet_size, m - 1));
    report.items.push_back({"M=" + std::to_string(m + 1), lhs == rhs});
  }
  return report;
}

Rational weighted_event_oracle(const Rational& p_one, int length,
                               Placement placement, int pair_position) {
  if (p_one < 0 || p_one > 1)
    throw std::invalid_argument("p_one must lie in [0, 1]");
  require_trials(length);
  if (length > 24)
    throw ResourceError("weighted oracle enumerates 2^length strings; "
                        "length > 24 exceeds the budget");
  int required = 0;
  switch (placement) {
    case Placement::AtEnd: required = length - 1; break;
    case Placement::AtStart: required = 1; break;
    case Placement::AtPosition: required = pair_position; break;
    case Placement::AnywhereOnce: required = 0; break;
  }
  if (placement == Placement::AtPosition &&
      (required < 1 || required > length - 1))
    throw std::domain_error("pair position must lie in [1, length-1]");

  const Rational q = Rational(1) - p_one;
  std::vector<Rational> p_pow(length + 1), q_pow(length + 1);
  p_pow[0] = q_pow[0] = 1;
  for (int i = 1; i <= length; ++i) {
    p_pow[i] = p_pow[i - 1] * p_one;
    q_pow[i] = q_pow[i - 1] * q;
  }

  Rational total = 0;
  const std::uint32_t strings = 1u << length;
  for (std::uint32_t bits = 0; bits < strings; ++bits) {
    // bit i of `bits` is position i+1's indicator
    int pair_count = 0, first_pair = 0, ones = 0;
    for (int i = 0; i < length; ++i) {
      if (bits & (1u << i)) ++ones;
      if (i + 1 < length && (bits & (1u << i)) && (bits & (1u << (i + 1)))) {
        ++pair_count;
        if (pair_count == 1) first_pair = i + 1;
      }
    }
    if (pair_count != 1) continue;
    if (required != 0 && first_pair != required) continue;
    total += p_pow[ones] * q_pow[length - ones];
  }
  return total;
}

}  // namespace qcoin
