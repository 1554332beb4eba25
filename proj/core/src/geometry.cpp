#include "qcoin/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcoin {

namespace {

constexpr int kMaxAxisQubits = 62;  // uint64 bounds

void validate_axis(const AxisInterval& axis) {
  if (axis.qubit_count < 1 || axis.qubit_count > kMaxAxisQubits)
    throw std::domain_error("axis qubit count must lie in [1, 62]");
  const std::uint64_t size = std::uint64_t(1) << axis.qubit_count;
  if (axis.lower > axis.upper || axis.upper > size)
    throw std::domain_error("axis interval must satisfy 0 <= k <= l <= 2^n");
}

}  // namespace

void validate(const BlochPoint& p) {
  if (p.theta < 0.0 || p.theta > std::numbers::pi)
    throw std::domain_error("theta must lie in [0, pi]");
  if (p.phi < 0.0 || p.phi >= 2.0 * std::numbers::pi)
    throw std::domain_error("phi must lie in [0, 2 pi)");
}

double cap_area_fraction(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw std::domain_error("theta must lie in [0, pi]");
  const double s = std::sin(theta / 2);
  return s * s;
}

double cap_area_complement(double theta) {
  return 1.0 - cap_area_fraction(theta);
}

void validate(const BoxRegion& region) {
  if (region.dims.empty())
    throw std::domain_error("box region needs at least one axis");
  for (const auto& axis : region.dims) validate_axis(axis);
}

Rational interval_probability(int qubit_count, std::uint64_t lower,
                              std::uint64_t upper) {
  const AxisInterval axis{lower, upper, qubit_count};
  validate_axis(axis);
  return Rational(Integer(upper - lower), pow2(unsigned(qubit_count)));
}

Rational box_probability(const BoxRegion& region) {
  validate(region);
  Integer numerator = 1;
  unsigned total_qubits = 0;
  for (const auto& axis : region.dims) {
    numerator *= Integer(axis.upper - axis.lower);
    total_qubits += unsigned(axis.qubit_count);
  }
  return Rational(numerator, pow2(total_qubits));
}

}  // namespace qcoin
