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

#include "liarq/qstate.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "liarq/errors.hpp"

namespace liarq {

struct StateAccess {
  static std::vector<Complex>& amplitudes(StateVector& s) { return s.amplitudes_; }
  static StateVector make(int n, std::vector<Complex> a) { return StateVector(n, std::move(a)); }
};

namespace {

double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

// Bit mask of a 1-based qubit index in an n-qubit register.
std::uint64_t qubit_mask(int qubit, int num_qubits) {
  return std::uint64_t{1} << (num_qubits - qubit);
}

void check_qubit(int qubit, int num_qubits) {
  if (qubit < 1 || qubit > num_qubits) {
    throw DomainError("qubit index " + std::to_string(qubit) + " out of range [1, " +
                      std::to_string(num_qubits) + "]");
  }
}

void apply_in_place(std::vector<Complex>& amps, int num_qubits, int qubit, const SingleQubitUnitary& u) {
  const std::uint64_t mask = qubit_mask(qubit, num_qubits);
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    const Complex a0 = amps[i];
    const Complex a1 = amps[i | mask];
    amps[i] = u00 * a0 + u01 * a1;
    amps[i | mask] = u10 * a0 + u11 * a1;
  }
}

}  // namespace

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw DomainError("amplitude count must be a power of two >= 2, got " + std::to_string(dim));
  }
  const int n = std::countr_zero(dim);
  if (n > 30) throw ResourceError("register too large");
  double norm = 0.0;
  for (const auto& a : amplitudes) norm += std::norm(a);
  if (std::abs(norm - 1.0) > kExactTolerance) {
    throw DomainError("state is not normalized (norm^2 = " + std::to_string(norm) + ")");
  }
  return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  if (num_qubits < 1 || num_qubits > 30) throw DomainError("qubit count out of range");
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  if (index >= amps.size()) throw DomainError("basis index out of range");
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_bitstring(const std::string& bits) {
  if (bits.empty() || bits.size() > 30) throw DomainError("bitstring length out of range");
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw DomainError("bitstring may contain only 0 and 1: '" + bits + "'");
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return basis(static_cast<int>(bits.size()), index);
}

double StateVector::norm_squared() const {
  double norm = 0.0;
  for (const auto& a : amplitudes_) norm += std::norm(a);
  return norm;
}

std::string StateVector::format_rows(bool skip_zero) const {
  std::ostringstream out;
  out.precision(17);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (skip_zero && std::abs(amplitudes_[i]) < kExactTolerance) continue;
    out << i << ' ' << to_bitstring(i, num_qubits_) << ' ' << amplitudes_[i].real() << ' '
        << amplitudes_[i].imag() << '\n';
  }
  return out.str();
}

SingleQubitUnitary::SingleQubitUnitary(const std::array<Complex, 4>& entries) : m_(entries) {
  // (U^dagger U)_{ij} = sum_k conj(U_ki) U_kj
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex sum = std::conj(m_[i]) * m_[j] + std::conj(m_[2 + i]) * m_[2 + j];
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(sum - expected) > kExactTolerance) throw DomainError("matrix is not unitary");
    }
  }
}

SingleQubitUnitary SingleQubitUnitary::identity() { return SingleQubitUnitary({1.0, 0.0, 0.0, 1.0}, Unchecked{}); }

SingleQubitUnitary SingleQubitUnitary::pauli_x() { return SingleQubitUnitary({0.0, 1.0, 1.0, 0.0}, Unchecked{}); }

SingleQubitUnitary SingleQubitUnitary::random(Rng& rng) {
  std::normal_distribution<double> gauss;
  Complex a, b;
  double norm = 0.0;
  while (norm < 1e-6) {
    a = {gauss(rng), gauss(rng)};
    b = {gauss(rng), gauss(rng)};
    norm = std::sqrt(std::norm(a) + std::norm(b));
  }
  a /= norm;
  b /= norm;
  const double alpha = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
  const Complex phase = std::polar(1.0, alpha);
  return SingleQubitUnitary({phase * a, -phase * std::conj(b), phase * b, phase * std::conj(a)}, Unchecked{});
}

SingleQubitUnitary SingleQubitUnitary::adjoint() const {
  return SingleQubitUnitary({std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])}, Unchecked{});
}

MeasurementDirection::MeasurementDirection(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw DomainError("theta must lie in [0, pi]");
  if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) throw DomainError("phi must lie in [0, 2pi)");
}

MeasurementDirection MeasurementDirection::random(Rng& rng) {
  const double cos_theta = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
  double phi = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
  if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
  return MeasurementDirection(std::acos(cos_theta), phi);
}

SingleQubitUnitary MeasurementDirection::to_computational() const {
  // up = (c, e^{i phi} s), down = (s, -e^{i phi} c); rows are their conjugates.
  const double c = std::cos(theta_ / 2.0);
  const double s = std::sin(theta_ / 2.0);
  const Complex e = std::polar(1.0, -phi_);
  return SingleQubitUnitary({c, e * s, s, -e * c});
}

int count_leading_half_zeros(std::uint64_t index, int num_qubits) {
  const int half = num_qubits / 2;
  int zeros = 0;
  for (int q = 1; q <= half; ++q) {
    if (!(index & qubit_mask(q, num_qubits))) ++zeros;
  }
  return zeros;
}

StateVector make_singlet(int n, int max_qubits) {
  if (n < 2 || n % 2 != 0) throw DomainError("singlet size must be a positive even integer, got " + std::to_string(n));
  if (n > max_qubits) {
    throw ResourceError("singlet size " + std::to_string(n) + " exceeds maximum " + std::to_string(max_qubits));
  }
  const int half = n / 2;
  const double scale = 1.0 / (factorial(half) * std::sqrt(half + 1.0));
  std::vector<Complex> amps(std::size_t{1} << n);
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (std::popcount(i) != half) continue;
    const int z = count_leading_half_zeros(i, n);
    const double sign = (half - z) % 2 == 0 ? 1.0 : -1.0;
    amps[i] = sign * factorial(z) * factorial(half - z) * scale;
  }
  return StateAccess::make(n, std::move(amps));
}

StateVector apply_single_qubit(const StateVector& state, int qubit, const SingleQubitUnitary& u) {
  check_qubit(qubit, state.num_qubits());
  StateVector out = state;
  apply_in_place(StateAccess::amplitudes(out), out.num_qubits(), qubit, u);
  return out;
}

StateVector apply_bilateral(const StateVector& state, const SingleQubitUnitary& u) {
  StateVector out = state;
  for (int q = 1; q <= out.num_qubits(); ++q) apply_in_place(StateAccess::amplitudes(out), out.num_qubits(), q, u);
  return out;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw DomainError("fidelity of states with different qubit counts");
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) overlap += std::conj(a[i]) * b[i];
  return std::abs(overlap);
}

void measure_in_place(StateVector& state, std::span<const int> targets, const MeasurementDirection& direction,
                      Rng& rng, std::span<std::uint8_t> bits) {
  const int n = state.num_qubits();
  if (targets.empty()) throw DomainError("no measurement targets");
  if (bits.size() != targets.size()) throw DomainError("output span size does not match target count");
  std::uint64_t seen = 0;
  for (int q : targets) {
    check_qubit(q, n);
    if (seen & qubit_mask(q, n)) throw DomainError("duplicate measurement target " + std::to_string(q));
    seen |= qubit_mask(q, n);
  }

  auto& amps = StateAccess::amplitudes(state);
  const bool rotate = !direction.is_computational();
  const SingleQubitUnitary to_z = direction.to_computational();
  if (rotate) {
    for (int q : targets) apply_in_place(amps, n, q, to_z);
  }

  // Outcome k has bit (k-1-t) set when target t reads 1.
  const std::size_t k = targets.size();
  auto outcome_of = [&](std::uint64_t index) {
    std::uint64_t o = 0;
    for (int q : targets) o = (o << 1) | ((index & qubit_mask(q, n)) ? 1u : 0u);
    return o;
  };
  std::vector<double> probs(std::size_t{1} << k, 0.0);
  for (std::uint64_t i = 0; i < amps.size(); ++i) probs[outcome_of(i)] += std::norm(amps[i]);

  const double r = uniform01(rng);
  double acc = 0.0;
  std::uint64_t chosen = probs.size();
  for (std::uint64_t o = 0; o < probs.size(); ++o) {
    if (probs[o] <= 0.0) continue;
    acc += probs[o];
    chosen = o;
    if (r < acc) break;
  }
  if (chosen == probs.size()) throw DomainError("cannot measure a zero state");

  const double scale = 1.0 / std::sqrt(probs[chosen]);
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    amps[i] = outcome_of(i) == chosen ? amps[i] * scale : Complex{};
  }
  if (rotate) {
    const SingleQubitUnitary back = to_z.adjoint();
    for (int q : targets) apply_in_place(amps, n, q, back);
  }
  for (std::size_t t = 0; t < k; ++t) bits[t] = static_cast<std::uint8_t>((chosen >> (k - 1 - t)) & 1u);
}

MeasurementResult measure_qubits(const StateVector& state, std::span<const int> targets,
                                 const MeasurementDirection& direction, Rng& rng) {
  MeasurementResult result{std::vector<std::uint8_t>(targets.size()), state};
  measure_in_place(result.collapsed, targets, direction, rng, result.bits);
  return result;
}

std::vector<double> joint_distribution(const StateVector& state, const MeasurementDirection& direction) {
  StateVector rotated = direction.is_computational() ? state : apply_bilateral(state, direction.to_computational());
  std::vector<double> probs(rotated.dimension());
  for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = std::norm(rotated[i]);
  return probs;
}

std::string to_bitstring(std::uint64_t index, int num_qubits) {
  std::string s(static_cast<std::size_t>(num_qubits), '0');
  for (int q = 1; q <= num_qubits; ++q) {
    if (index & qubit_mask(q, num_qubits)) s[static_cast<std::size_t>(q - 1)] = '1';
  }
  return s;
}

}  // namespace liarq
