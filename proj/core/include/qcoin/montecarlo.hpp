#pragma once

#include "qcoin/exact.hpp"
#include "qcoin/pattern_count.hpp"
#include "qcoin/probability.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qcoin {

// The event watched during a run: one doubled "1" at the stated place.
// Run length of the pattern is fixed at 2.
struct EventSpec {
  Placement placement = Placement::AtEnd;
  int position = 0;  // 1-based, used when placement == AtPosition
};

struct TrialEstimate {
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  double estimate = 0.0;   // hits / trials
  double std_error = 0.0;  // sqrt(est (1 - est) / trials)
  std::uint64_t seed = 0;
};

struct ConvergencePoint {
  TrialEstimate estimate;
  Rational exact;
  double abs_error = 0.0;
};

// Generator identity, recorded in report metadata. Draw j of run r uses
// counter c = r * trials_per_run + j and produces
//   mix64(seed + (c + 1) * 0x9E3779B97F4A7C15)
// where mix64 is the SplitMix64 finalizer. Counter-based, so parallel and
// serial execution agree bit for bit.
inline constexpr const char* kGeneratorId = "splitmix64-counter-v1";

std::uint64_t rng_draw(std::uint64_t seed, std::uint64_t counter);

// True when the outcome string contains its doubled "1" exactly where the
// event demands. Independent of the enumeration oracle's predicate.
bool event_matches(std::span<const std::uint8_t> outcomes,
                   const EventSpec& event);

// Draws `runs` independent outcome strings of length trials_per_run from
// the model and counts event hits. Same seed, same result.
TrialEstimate simulate(const CoinModel& model, int trials_per_run,
                       const EventSpec& event, std::uint64_t runs,
                       std::uint64_t seed);

// Estimates at each schedule point, all cut from one deterministic stream,
// with the exact probability and absolute error alongside.
std::vector<ConvergencePoint> convergence_report(
    const CoinModel& model, int trials_per_run, const EventSpec& event,
    std::span<const std::uint64_t> run_schedule, std::uint64_t seed);

// Exact event probability under the model, via a weighted no-adjacent-pair
// recurrence (any length, any placement).
Rational exact_event_probability(const CoinModel& model, int trials_per_run,
                                 const EventSpec& event);

}  // namespace qcoin
