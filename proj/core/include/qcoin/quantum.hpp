#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qcoin {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 26;
inline constexpr int kMaxHadamardQubits = 10;
inline constexpr double kNormTolerance = 1e-12;

// Dense n-qubit state vector. Basis index k corresponds to the binary
// string a_{n-1}...a_0 (leftmost qubit = most significant bit), and the
// amplitudes are validated to be unit-norm within 1e-12 at construction.
class NQubitState {
 public:
  NQubitState(int qubit_count, std::vector<Complex> amplitudes);

  static NQubitState basis(int qubit_count, std::uint64_t index);

  int qubit_count() const { return qubit_count_; }
  std::uint64_t dimension() const { return amplitudes_.size(); }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::uint64_t i) const { return amplitudes_[i]; }

  // |c_k|^2 for every basis state.
  std::vector<double> measurement_distribution() const;

  Complex inner_product(const NQubitState& other) const;

 private:
  int qubit_count_;
  std::vector<Complex> amplitudes_;
};

// (1/sqrt 2)(|0> + e^{i phase}|1>): the fair quantum coin. phase = 0 gives
// |+>, phase = pi gives |->.
struct QuantumCoinState {
  double phase = 0.0;
  NQubitState state() const;
};

// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dimension);
  static ComplexMatrix identity(int dimension);

  int dimension() const { return dim_; }
  Complex& at(int row, int col) { return entries_[std::size_t(row) * dim_ + col]; }
  const Complex& at(int row, int col) const {
    return entries_[std::size_t(row) * dim_ + col];
  }

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix adjoint() const;
  std::vector<Complex> apply(std::span<const Complex> v) const;
  std::vector<Complex> column(int col) const;

  // max_{ij} |a_ij - b_ij|
  double max_abs_diff(const ComplexMatrix& rhs) const;

 private:
  int dim_ = 0;
  std::vector<Complex> entries_;
};

// Shannon entropy (base 2) of the basis-measurement distribution, in bits.
// Zero-probability terms contribute nothing; 0 <= S <= qubit_count.
double shannon_entropy(const NQubitState& state);
double distribution_entropy(std::span<const double> probabilities);

// c_{ij} = a_i * b_j with `a` occupying the high-order bits.
NQubitState tensor_product(const NQubitState& a, const NQubitState& b);

// S(state) - [S(left marginal) + S(right marginal)] across the given
// qubit split. A nonzero gap certifies the state is entangled in the
// measurement-entropy sense; zero proves nothing.
double entropy_additivity_gap(const NQubitState& state, int split);

// (1/sqrt 2^n)(|0> + e^{i phases[0]}|1> + ... + e^{i phases[2^n-2]}|2^n-1>).
NQubitState maximally_random_state(int qubit_count,
                                   std::span<const double> phases);
NQubitState maximally_random_state(int qubit_count);  // all phases zero

// cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>.
NQubitState bloch_qubit(double theta, double phi);

// H(k,l) = conj(q)^{k*l} / sqrt(2^n) with q = e^{i 2 pi / 2^n}. Unitary;
// every column is maximally random. Throws ResourceError past n = 10.
ComplexMatrix generalized_hadamard(int qubit_count);

// Cyclic shift: S|k> = |k+1 mod d>, S^d = I; d = 2 gives the X gate.
ComplexMatrix sylvester_shift(int dimension);

// I + Q + Q^2 + ... + Q^{d-1} for a d-dimensional Q. With Q = conj(q)^k S,
// (1/sqrt d) times this applied to |0> rebuilds Hadamard column k.
ComplexMatrix matrix_q_number(const ComplexMatrix& q);

// The 2^n Hadamard columns as states: orthonormal, complete, each with
// maximal entropy.
std::vector<NQubitState> coin_state_family(int qubit_count);

// Sum of |c_s|^2 over the given basis indices (treated as a set).
double projector_probability(const NQubitState& state,
                             std::span<const std::uint64_t> basis_indices);

}  // namespace qcoin
