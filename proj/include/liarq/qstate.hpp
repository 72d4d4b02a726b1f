// Copyright 2026 The liarq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense state-vector engine for small qubit registers.
//
// Basis index convention: qubit 1 is the most significant bit of the
// amplitude index, so for four qubits |0011> is index 3. Qubit indices in the
// public API are 1-based.

#ifndef LIARQ_QSTATE_HPP
#define LIARQ_QSTATE_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "liarq/random.hpp"

namespace liarq {

using Complex = std::complex<double>;

inline constexpr double kExactTolerance = 1e-12;
inline constexpr double kInvarianceTolerance = 1e-10;
inline constexpr int kDefaultMaxQubits = 10;

class StateVector {
 public:
  // Validates size (a power of two) and normalization within 1e-12.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);
  static StateVector basis(int num_qubits, std::uint64_t index);
  // Parses a computational basis ket written as a bitstring, e.g. "0011".
  static StateVector from_bitstring(const std::string& bits);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t index) const { return amplitudes_[index]; }

  double norm_squared() const;

  // One "index bitstring re im" row per basis state; rows with magnitude below
  // cutoff are skipped when skip_zero is set.
  std::string format_rows(bool skip_zero = true) const;

 private:
  friend struct StateAccess;
  StateVector(int num_qubits, std::vector<Complex> amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

  int num_qubits_;
  std::vector<Complex> amplitudes_;
};

class SingleQubitUnitary {
 public:
  // Row-major entries {u00, u01, u10, u11}; throws DomainError unless
  // U^dagger U = I within 1e-12.
  explicit SingleQubitUnitary(const std::array<Complex, 4>& entries);

  static SingleQubitUnitary identity();
  static SingleQubitUnitary pauli_x();
  // Haar-distributed random unitary.
  static SingleQubitUnitary random(Rng& rng);

  const Complex& operator()(int row, int col) const { return m_[static_cast<std::size_t>(2 * row + col)]; }
  SingleQubitUnitary adjoint() const;

 private:
  struct Unchecked {};
  SingleQubitUnitary(const std::array<Complex, 4>& entries, Unchecked) : m_(entries) {}

  std::array<Complex, 4> m_;
};

// Spin axis (theta, phi). Outcome 0 is "up" along the axis, 1 is "down".
class MeasurementDirection {
 public:
  MeasurementDirection() = default;
  // theta in [0, pi], phi in [0, 2 pi).
  MeasurementDirection(double theta, double phi);

  static MeasurementDirection computational() { return {}; }
  // Uniform on the sphere.
  static MeasurementDirection random(Rng& rng);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  bool is_computational() const { return theta_ == 0.0 && phi_ == 0.0; }

  // Unitary mapping the up/down eigenvectors to |0>/|1>.
  SingleQubitUnitary to_computational() const;

  friend bool operator==(const MeasurementDirection&, const MeasurementDirection&) = default;

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
};

// Number of zeros among the first half of the positions of a bitstring index.
int count_leading_half_zeros(std::uint64_t index, int num_qubits);

// N-qubit singlet: amplitude z!(n/2-z)!(-1)^(n/2-z) / ((n/2)! sqrt(n/2+1)) on
// every balanced bitstring, zero elsewhere.
StateVector make_singlet(int n, int max_qubits = kDefaultMaxQubits);

StateVector apply_single_qubit(const StateVector& state, int qubit, const SingleQubitUnitary& u);
StateVector apply_bilateral(const StateVector& state, const SingleQubitUnitary& u);

// |<a|b>|
double fidelity(const StateVector& a, const StateVector& b);

struct MeasurementResult {
  std::vector<std::uint8_t> bits;  // one per target, in target order
  StateVector collapsed;
};

// Born-rule projective measurement of the listed qubits along a common axis.
MeasurementResult measure_qubits(const StateVector& state, std::span<const int> targets,
                                 const MeasurementDirection& direction, Rng& rng);

// In-place variant used by the protocol simulation; writes one bit per target
// into bits.
void measure_in_place(StateVector& state, std::span<const int> targets,
                      const MeasurementDirection& direction, Rng& rng,
                      std::span<std::uint8_t> bits);

// Exact outcome probabilities for measuring every qubit along direction,
// indexed like amplitudes.
std::vector<double> joint_distribution(const StateVector& state, const MeasurementDirection& direction);

std::string to_bitstring(std::uint64_t index, int num_qubits);

}  // namespace liarq

#endif  // LIARQ_QSTATE_HPP
