#pragma once

#include "qcoin/exact.hpp"

#include <cstdint>
#include <vector>

namespace qcoin {

struct BlochPoint {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)
};

void validate(const BlochPoint& p);

// Relative area of the spherical cap of angular radius theta, measured from
// the |0> pole: sin^2(theta/2). Equals the measurement probability p_1 of
// |theta, phi>.
double cap_area_fraction(double theta);

// 1 - cap_area_fraction(theta) = cos^2(theta/2), i.e. p_0.
double cap_area_complement(double theta);

// Half-open interval [lower, upper) on an axis of 2^qubit_count states.
struct AxisInterval {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  int qubit_count = 0;
};

struct BoxRegion {
  std::vector<AxisInterval> dims;
};

void validate(const BoxRegion& region);

// (upper - lower) / 2^qubit_count, exactly.
Rational interval_probability(int qubit_count, std::uint64_t lower,
                              std::uint64_t upper);

// prod_s (upper_s - lower_s) / 2^{sum n_s}, exactly. One axis reduces to
// interval_probability.
Rational box_probability(const BoxRegion& region);

}  // namespace qcoin
