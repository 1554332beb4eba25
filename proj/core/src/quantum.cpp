#include "qcoin/quantum.hpp"

#include "qcoin/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcoin {

namespace {

void require_qubits(int n, int limit = kMaxQubits) {
  if (n < 1) throw std::invalid_argument("qubit count must be at least 1");
  if (n > limit)
    throw ResourceError("qubit count " + std::to_string(n) +
                        " exceeds the 2^" + std::to_string(limit) +
                        " dimension budget");
}

double norm_squared(const std::vector<Complex>& amplitudes) {
  double sum = 0.0;
  for (const auto& c : amplitudes) sum += std::norm(c);
  return sum;
}

}  // namespace

NQubitState::NQubitState(int qubit_count, std::vector<Complex> amplitudes)
    : qubit_count_(qubit_count), amplitudes_(std::move(amplitudes)) {
  require_qubits(qubit_count);
  if (amplitudes_.size() != (std::uint64_t(1) << qubit_count))
    throw std::invalid_argument("amplitude vector must have 2^n entries");
  if (std::abs(norm_squared(amplitudes_) - 1.0) > kNormTolerance)
    throw std::invalid_argument("state is not normalized");
}

NQubitState NQubitState::basis(int qubit_count, std::uint64_t index) {
  require_qubits(qubit_count);
  const std::uint64_t dim = std::uint64_t(1) << qubit_count;
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  std::vector<Complex> amps(dim, Complex(0, 0));
  amps[index] = Complex(1, 0);
  return NQubitState(qubit_count, std::move(amps));
}

std::vector<double> NQubitState::measurement_distribution() const {
  std::vector<double> p(amplitudes_.size());
  for (std::size_t i = 0; i < amplitudes_.size(); ++i)
    p[i] = std::norm(amplitudes_[i]);
  return p;
}

Complex NQubitState::inner_product(const NQubitState& other) const {
  if (qubit_count_ != other.qubit_count_)
    throw std::invalid_argument("states must have the same qubit count");
  Complex sum(0, 0);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i)
    sum += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  return sum;
}

NQubitState QuantumCoinState::state() const {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return NQubitState(1, {Complex(inv_sqrt2, 0),
                         std::polar(inv_sqrt2, phase)});
}

ComplexMatrix::ComplexMatrix(int dimension)
    : dim_(dimension), entries_(std::size_t(dimension) * dimension) {
  if (dimension < 1) throw std::invalid_argument("dimension must be positive");
}

ComplexMatrix ComplexMatrix::identity(int dimension) {
  ComplexMatrix m(dimension);
  for (int i = 0; i < dimension; ++i) m.at(i, i) = Complex(1, 0);
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_)
    throw std::invalid_argument("matrix dimensions disagree");
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      const Complex a = at(i, k);
      if (a == Complex(0, 0)) continue;
      for (int j = 0; j < dim_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_)
    throw std::invalid_argument("matrix dimensions disagree");
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] += rhs.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out.at(j, i) = std::conj(at(i, j));
  return out;
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> v) const {
  if (v.size() != std::size_t(dim_))
    throw std::invalid_argument("vector length disagrees with dimension");
  std::vector<Complex> out(dim_, Complex(0, 0));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

std::vector<Complex> ComplexMatrix::column(int col) const {
  if (col < 0 || col >= dim_) throw std::invalid_argument("column out of range");
  std::vector<Complex> out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = at(i, col);
  return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_)
    throw std::invalid_argument("matrix dimensions disagree");
  double worst = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    worst = std::max(worst, std::abs(entries_[i] - rhs.entries_[i]));
  return worst;
}

double distribution_entropy(std::span<const double> probabilities) {
  double entropy = 0.0;
  for (double p : probabilities) {
    if (p < 0.0) throw std::invalid_argument("negative probability");
    if (p > 0.0) entropy -= p * std::log2(p);
  }
  return entropy;
}

double shannon_entropy(const NQubitState& state) {
  const auto p = state.measurement_distribution();
  double sum = 0.0;
  for (double x : p) sum += x;
  if (std::abs(sum - 1.0) > kNormTolerance)
    throw std::invalid_argument("state is not normalized");
  return distribution_entropy(p);
}

NQubitState tensor_product(const NQubitState& a, const NQubitState& b) {
  require_qubits(a.qubit_count() + b.qubit_count());
  std::vector<Complex> amps(a.dimension() * b.dimension());
  for (std::uint64_t i = 0; i < a.dimension(); ++i)
    for (std::uint64_t j = 0; j < b.dimension(); ++j)
      amps[i * b.dimension() + j] = a[i] * b[j];
  return NQubitState(a.qubit_count() + b.qubit_count(), std::move(amps));
}

double entropy_additivity_gap(const NQubitState& state, int split) {
  const int n = state.qubit_count();
  if (split < 1 || split > n - 1)
    throw std::invalid_argument("split must lie in [1, n-1]");

  const int right_bits = n - split;
  std::vector<double> left(std::uint64_t(1) << split, 0.0);
  std::vector<double> right(std::uint64_t(1) << right_bits, 0.0);
  const auto p = state.measurement_distribution();
  for (std::uint64_t i = 0; i < p.size(); ++i) {
    left[i >> right_bits] += p[i];
    right[i & ((std::uint64_t(1) << right_bits) - 1)] += p[i];
  }
  return distribution_entropy(p) -
         (distribution_entropy(left) + distribution_entropy(right));
}

NQubitState maximally_random_state(int qubit_count,
                                   std::span<const double> phases) {
  require_qubits(qubit_count);
  const std::uint64_t dim = std::uint64_t(1) << qubit_count;
  if (phases.size() != dim - 1)
    throw std::invalid_argument("expected 2^n - 1 phases");
  const double amp = 1.0 / std::sqrt(double(dim));
  std::vector<Complex> amps(dim);
  amps[0] = Complex(amp, 0);
  for (std::uint64_t k = 1; k < dim; ++k)
    amps[k] = std::polar(amp, phases[k - 1]);
  return NQubitState(qubit_count, std::move(amps));
}

NQubitState maximally_random_state(int qubit_count) {
  require_qubits(qubit_count);
  const std::vector<double> phases((std::uint64_t(1) << qubit_count) - 1, 0.0);
  return maximally_random_state(qubit_count, phases);
}

NQubitState bloch_qubit(double theta, double phi) {
  return NQubitState(1, {Complex(std::cos(theta / 2), 0),
                         std::polar(std::sin(theta / 2), phi)});
}

ComplexMatrix generalized_hadamard(int qubit_count) {
  require_qubits(qubit_count, kMaxHadamardQubits);
  const int dim = 1 << qubit_count;
  const double inv_sqrt_dim = 1.0 / std::sqrt(double(dim));

  // conj(q)^m for q = e^{i 2 pi / dim}, tabulated once per residue.
  std::vector<Complex> root(dim);
  for (int m = 0; m < dim; ++m)
    root[m] = std::polar(inv_sqrt_dim, -2.0 * std::numbers::pi * m / dim);

  ComplexMatrix h(dim);
  for (int k = 0; k < dim; ++k)
    for (int l = 0; l < dim; ++l)
      h.at(k, l) = root[std::size_t(k) * l % dim];
  return h;
}

ComplexMatrix sylvester_shift(int dimension) {
  if (dimension < 2)
    throw std::invalid_argument("shift needs dimension >= 2");
  ComplexMatrix s(dimension);
  for (int k = 0; k < dimension; ++k)
    s.at((k + 1) % dimension, k) = Complex(1, 0);
  return s;
}

ComplexMatrix matrix_q_number(const ComplexMatrix& q) {
  const int dim = q.dimension();
  ComplexMatrix sum = ComplexMatrix::identity(dim);
  ComplexMatrix power = ComplexMatrix::identity(dim);
  for (int j = 1; j < dim; ++j) {
    power = power * q;
    sum = sum + power;
  }
  return sum;
}

std::vector<NQubitState> coin_state_family(int qubit_count) {
  const ComplexMatrix h = generalized_hadamard(qubit_count);
  std::vector<NQubitState> family;
  family.reserve(h.dimension());
  for (int k = 0; k < h.dimension(); ++k)
    family.emplace_back(qubit_count, h.column(k));
  return family;
}

double projector_probability(const NQubitState& state,
                             std::span<const std::uint64_t> basis_indices) {
  std::vector<std::uint64_t> set(basis_indices.begin(), basis_indices.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());

  double sum = 0.0;
  for (std::uint64_t s : set) {
    if (s >= state.dimension())
      throw std::invalid_argument("basis index out of range");
    sum += std::norm(state[s]);
  }
  return sum;
}

}  // namespace qcoin
