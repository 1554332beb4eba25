#include "qcoin/pattern_count.hpp"

#include "qcoin/sequences.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace qcoin {

namespace {

constexpr int kMaxEnumLength = 31;  // digit buffer bound; budget caps earlier

struct SegmentView {
  int offset;    // 0-based start within the string
  int length;
  int pair_pos;  // 1-based within the segment; 0 = anywhere-once
};

// The literal allowed-set predicate: the doubled distinguished symbol "1"
// appears exactly once inside the segment, at the required place. No
// Fibonacci knowledge on this path.
bool segment_allows(const std::uint8_t* s, int length, int pair_pos) {
  int pair_count = 0;
  int first_pair = 0;
  for (int i = 0; i + 1 < length; ++i) {
    if (s[i] == 1 && s[i + 1] == 1) {
      if (++pair_count > 1) return false;
      first_pair = i + 1;  // 1-based
    }
  }
  if (pair_count != 1) return false;
  return pair_pos == 0 || first_pair == pair_pos;
}

// Effective 1-based pair position for an unpartitioned spec; 0 means free.
int effective_position(Placement placement, int position, int length) {
  switch (placement) {
    case Placement::AtEnd: return length - 1;
    case Placement::AtStart: return 1;
    case Placement::AtPosition: return position;
    case Placement::AnywhereOnce: return 0;
  }
  throw std::invalid_argument("unknown placement");
}

std::vector<SegmentView> segment_views(const PatternSpec& spec) {
  std::vector<SegmentView> views;
  if (spec.partition.empty()) {
    views.push_back({0, spec.total_length,
                     effective_position(spec.placement, spec.position,
                                        spec.total_length)});
    return views;
  }
  int offset = 0;
  for (std::size_t i = 0; i < spec.partition.size(); ++i) {
    const int len = spec.partition[i];
    int pos = spec.positions.empty() ? 0 : spec.positions[i];
    if (pos == 0) pos = len - 1;  // unstated: pair at the segment end
    views.push_back({offset, len, pos});
    offset += len;
  }
  return views;
}

bool spec_allows(const std::uint8_t* s, const std::vector<SegmentView>& views) {
  for (const auto& v : views)
    if (!segment_allows(s + v.offset, v.length, v.pair_pos)) return false;
  return true;
}

void check_budget(const PatternSpec& spec, int budget_log2) {
  const double bits = spec.total_length * std::log2(double(spec.alphabet_size));
  if (bits > double(budget_log2) + 1e-9)
    throw ResourceError("enumeration of " + std::to_string(spec.alphabet_size) +
                        "^" + std::to_string(spec.total_length) +
                        " outcomes exceeds the 2^" + std::to_string(budget_log2) +
                        " budget");
}

std::uint64_t enumeration_size(const PatternSpec& spec) {
  std::uint64_t total = 1;
  for (int i = 0; i < spec.total_length; ++i)
    total *= std::uint64_t(spec.alphabet_size);
  return total;
}

// Digits are little-endian in the loop counter: digit i holds position i+1.
void decode(std::uint64_t v, int d, int length, std::uint8_t* s) {
  for (int i = 0; i < length; ++i) {
    s[i] = std::uint8_t(v % d);
    v /= d;
  }
}

bool increment(std::uint8_t* s, int d, int length) {
  for (int i = 0; i < length; ++i) {
    if (++s[i] < d) return true;
    s[i] = 0;
  }
  return false;
}

std::uint64_t count_range(const PatternSpec& spec,
                          const std::vector<SegmentView>& views,
                          std::uint64_t lo, std::uint64_t hi) {
  std::array<std::uint8_t, kMaxEnumLength + 1> s{};
  decode(lo, spec.alphabet_size, spec.total_length, s.data());
  std::uint64_t hits = 0;
  for (std::uint64_t v = lo; v < hi; ++v) {
    if (spec_allows(s.data(), views)) ++hits;
    increment(s.data(), spec.alphabet_size, spec.total_length);
  }
  return hits;
}

AllowedCount make_count(Integer count, int d, int length) {
  return AllowedCount{std::move(count), ipow(Integer(d), unsigned(length))};
}

void require_length(int length, int minimum = 2) {
  if (length < minimum)
    throw std::domain_error("length must be at least " +
                            std::to_string(minimum));
}

}  // namespace

PatternSpec PatternSpec::end_duplicated(int length, int alphabet_size) {
  PatternSpec spec;
  spec.alphabet_size = alphabet_size;
  spec.total_length = length;
  spec.placement = Placement::AtEnd;
  return spec;
}

PatternSpec PatternSpec::start_duplicated(int length) {
  PatternSpec spec;
  spec.total_length = length;
  spec.placement = Placement::AtStart;
  return spec;
}

PatternSpec PatternSpec::at_position(int length, int k) {
  PatternSpec spec;
  spec.total_length = length;
  spec.placement = Placement::AtPosition;
  spec.position = k;
  return spec;
}

PatternSpec PatternSpec::anywhere_once(int length) {
  PatternSpec spec;
  spec.total_length = length;
  spec.placement = Placement::AnywhereOnce;
  return spec;
}

PatternSpec PatternSpec::partitioned(std::vector<int> segment_lengths,
                                     std::vector<int> pair_positions) {
  PatternSpec spec;
  spec.total_length =
      std::accumulate(segment_lengths.begin(), segment_lengths.end(), 0);
  spec.partition = std::move(segment_lengths);
  spec.positions = std::move(pair_positions);
  return spec;
}

void validate(const PatternSpec& spec) {
  if (spec.alphabet_size < 2)
    throw std::domain_error("alphabet size must be at least 2");
  if (spec.total_length < 2)
    throw std::domain_error("total length must be at least 2");

  if (spec.partition.empty()) {
    if (spec.placement == Placement::AtPosition &&
        (spec.position < 1 || spec.position > spec.total_length - 1))
      throw std::domain_error("pair position must lie in [1, length-1]");
    return;
  }

  if (spec.alphabet_size != 2)
    throw std::domain_error("partitioned patterns are binary only");
  int sum = 0;
  for (int len : spec.partition) {
    if (len < 2) throw std::domain_error("every segment needs length >= 2");
    sum += len;
  }
  if (sum != spec.total_length)
    throw std::domain_error("partition must sum to the total length");
  if (!spec.positions.empty()) {
    if (spec.positions.size() != spec.partition.size())
      throw std::domain_error("positions list must match the partition");
    for (std::size_t i = 0; i < spec.positions.size(); ++i) {
      const int pos = spec.positions[i];
      if (pos != 0 && (pos < 1 || pos > spec.partition[i] - 1))
        throw std::domain_error("segment pair position out of range");
    }
  }
}

AllowedCount count_end_duplicated(int length) {
  require_length(length);
  return make_count(fibonacci(length - 1), 2, length);
}

AllowedCount count_position_duplicated(int length, int pair_position) {
  require_length(length);
  if (pair_position < 1 || pair_position > length - 1)
    throw std::domain_error("pair position must lie in [1, length-1]");
  return make_count(fibonacci(pair_position) * fibonacci(length - pair_position),
                    2, length);
}

AllowedCount count_anywhere_once(int length) {
  require_length(length);
  const Integer numerator =
      Integer(length) * lucas(length) - fibonacci(length);
  Integer quotient, remainder;
  boost::multiprecision::divide_qr(numerator, Integer(5), quotient, remainder);
  if (remainder != 0)
    throw std::logic_error("(n L_n - F_n) not divisible by 5");
  return make_count(std::move(quotient), 2, length);
}

AllowedCount count_partitioned(const PatternSpec& spec) {
  validate(spec);
  if (spec.partition.empty())
    throw std::domain_error("count_partitioned needs a partition");
  Integer product = 1;
  for (const auto& v : segment_views(spec))
    product *= fibonacci(v.pair_pos) * fibonacci(v.length - v.pair_pos);
  return make_count(std::move(product), 2, spec.total_length);
}

AllowedCount count_qudit_end(int alphabet_size, int length) {
  if (alphabet_size < 2)
    throw std::domain_error("alphabet size must be at least 2");
  require_length(length);
  return make_count(qudit_fibonacci(alphabet_size, length - 1), alphabet_size,
                    length);
}

AllowedCount closed_form_count(const PatternSpec& spec) {
  validate(spec);
  if (!spec.partition.empty()) return count_partitioned(spec);
  if (spec.alphabet_size == 2) {
    switch (spec.placement) {
      case Placement::AtEnd: return count_end_duplicated(spec.total_length);
      case Placement::AtStart:
        return count_position_duplicated(spec.total_length, 1);
      case Placement::AtPosition:
        return count_position_duplicated(spec.total_length, spec.position);
      case Placement::AnywhereOnce:
        return count_anywhere_once(spec.total_length);
    }
  }
  if (spec.placement == Placement::AtEnd)
    return count_qudit_end(spec.alphabet_size, spec.total_length);
  throw std::invalid_argument(
      "no closed form for alphabet size > 2 away from the end placement");
}

AllowedCount brute_force_count(const PatternSpec& spec, int budget_log2) {
  validate(spec);
  check_budget(spec, budget_log2);
  const auto views = segment_views(spec);
  const std::uint64_t total = enumeration_size(spec);

  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t hits = 0;
  if (workers == 1 || total < (1u << 20)) {
    hits = count_range(spec, views, 0, total);
  } else {
    const std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<std::future<std::uint64_t>> futures;
    for (std::uint64_t lo = 0; lo < total; lo += chunk) {
      const std::uint64_t hi = std::min(total, lo + chunk);
      futures.push_back(std::async(std::launch::async, [&, lo, hi] {
        return count_range(spec, views, lo, hi);
      }));
    }
    for (auto& f : futures) hits += f.get();
  }
  return AllowedCount{Integer(hits), Integer(total)};
}

std::vector<std::uint64_t> brute_force_indices(const PatternSpec& spec,
                                               int budget_log2) {
  validate(spec);
  check_budget(spec, budget_log2);
  const auto views = segment_views(spec);
  const std::uint64_t total = enumeration_size(spec);
  const int d = spec.alphabet_size;
  const int length = spec.total_length;

  std::vector<std::uint64_t> indices;
  std::array<std::uint8_t, kMaxEnumLength + 1> s{};
  for (std::uint64_t v = 0; v < total; ++v) {
    if (spec_allows(s.data(), views)) {
      // Basis index: string read as a base-d numeral, position 1 most
      // significant.
      std::uint64_t index = 0;
      for (int i = 0; i < length; ++i) index = index * d + s[i];
      indices.push_back(index);
    }
    increment(s.data(), d, length);
  }
  std::sort(indices.begin(), indices.end());
  return indices;
}

const char* placement_name(Placement p) {
  switch (p) {
    case Placement::AtEnd: return "end";
    case Placement::AtStart: return "start";
    case Placement::AtPosition: return "at";
    case Placement::AnywhereOnce: return "anywhere-once";
  }
  return "?";
}

}  // namespace qcoin
