#pragma once

#include "qcoin/exact.hpp"

#include <cstdint>
#include <vector>

namespace qcoin {

// Where the single doubled "1" symbol must sit inside a string (or segment).
enum class Placement {
  AtEnd,         // pair occupies the last two positions
  AtStart,       // pair occupies the first two positions
  AtPosition,    // pair occupies (k, k+1), 1-based
  AnywhereOnce,  // pair occurs exactly once, position free
};

// Describes the set of allowed outcome strings: which alphabet, how long,
// and where the doubled distinguished symbol must appear. A nonempty
// `partition` splits the string into independent segments, each carrying
// its own pair (positions[i] == 0 means at the segment's end).
struct PatternSpec {
  int alphabet_size = 2;
  int total_length = 0;
  Placement placement = Placement::AtEnd;
  int position = 0;  // 1-based pair position, used when placement == AtPosition
  std::vector<int> partition;
  std::vector<int> positions;

  static PatternSpec end_duplicated(int length, int alphabet_size = 2);
  static PatternSpec start_duplicated(int length);
  static PatternSpec at_position(int length, int k);
  static PatternSpec anywhere_once(int length);
  static PatternSpec partitioned(std::vector<int> segment_lengths,
                                 std::vector<int> pair_positions = {});
};

// Throws std::domain_error / std::invalid_argument on malformed specs.
void validate(const PatternSpec& spec);

struct AllowedCount {
  Integer count;
  Integer total_outcomes;  // alphabet_size ^ total_length
};

// "...*11" over a binary alphabet: count = F_{n-1}.
AllowedCount count_end_duplicated(int length);

// Pair fixed at (k, k+1): count = F_k * F_{n-k}. k = n-1 is the end case,
// k = 1 the start case.
AllowedCount count_position_duplicated(int length, int pair_position);

// Pair anywhere, but exactly once: count = sum_k F_k F_{n-k}
// = (n L_n - F_n)/5 (the division is exact).
AllowedCount count_anywhere_once(int length);

// Independent per-segment pairs: count = product of per-segment counts.
AllowedCount count_partitioned(const PatternSpec& spec);

// d-ary strings ending in the doubled distinguished symbol: count = D_{M-1}.
AllowedCount count_qudit_end(int alphabet_size, int length);

// Dispatch to whichever closed form covers `spec`; throws
// std::invalid_argument when none does (e.g. d > 2 off the end placement).
AllowedCount closed_form_count(const PatternSpec& spec);

inline constexpr int kDefaultEnumerationBudgetLog2 = 26;

// Exhaustive enumeration oracle. Scans every alphabet^length string and
// applies the allowed-set predicate literally; shares no code with the
// closed forms above. Throws ResourceError past the budget.
AllowedCount brute_force_count(const PatternSpec& spec,
                               int budget_log2 = kDefaultEnumerationBudgetLog2);

// Same enumeration, returning the allowed computational-basis indices
// (string read as a base-d numeral, leftmost symbol most significant),
// sorted ascending.
std::vector<std::uint64_t> brute_force_indices(
    const PatternSpec& spec, int budget_log2 = kDefaultEnumerationBudgetLog2);

const char* placement_name(Placement p);

}  // namespace qcoin
