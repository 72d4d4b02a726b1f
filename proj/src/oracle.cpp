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

#include "liarq/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "liarq/errors.hpp"

namespace liarq {

namespace {

Bit bit_of(std::uint64_t index, int slot) { return static_cast<Bit>((index >> (4 - slot)) & 1u); }

const std::vector<double>& singlet_table() {
  static const std::vector<double> table = joint_distribution(make_singlet(4), MeasurementDirection::computational());
  return table;
}

void check_mixture(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("assignment mixture must lie in [0, 1]");
}

}  // namespace

double RoundDistribution::pair_probability(Pair a_pair) const {
  double sum = 0.0;
  for (Bit b = 0; b < 2; ++b)
    for (Bit c = 0; c < 2; ++c) sum += probability(a_pair, b, c);
  return sum;
}

double RoundDistribution::b_probability(Bit b_bit) const {
  double sum = 0.0;
  for (Pair a : {Pair::Zeros, Pair::Mixed, Pair::Ones})
    for (Bit c = 0; c < 2; ++c) sum += probability(a, b_bit, c);
  return sum;
}

double RoundDistribution::total() const {
  double sum = 0.0;
  for (double p : table_) sum += p;
  return sum;
}

void RoundDistribution::accumulate(const RoundDistribution& other, double weight) {
  for (std::size_t i = 0; i < table_.size(); ++i) table_[i] += weight * other.table_[i];
}

RoundDistribution round_distribution(Assignment assignment) {
  const auto& joint = singlet_table();
  RoundDistribution dist;
  for (std::uint64_t i = 0; i < joint.size(); ++i) {
    if (joint[i] == 0.0) continue;
    const Pair a = pair_from_bits(bit_of(i, 1), bit_of(i, a_second_slot(assignment)));
    dist.add(a, bit_of(i, b_slot(assignment)), bit_of(i, 4), joint[i]);
  }
  return dist;
}

RoundDistribution round_distribution_mixture(double p_first_second) {
  check_mixture(p_first_second);
  RoundDistribution dist;
  dist.accumulate(round_distribution(Assignment::HoldsFirstSecond), p_first_second);
  dist.accumulate(round_distribution(Assignment::HoldsFirstThird), 1.0 - p_first_second);
  return dist;
}

EscapeProbabilities escape_probabilities(double p_first_second) {
  const RoundDistribution mix = round_distribution_mixture(p_first_second);
  EscapeProbabilities e;

  // Target message m = 0 throughout; the 0<->1 symmetry of the state makes
  // m = 1 identical.
  const double mixed = mix.pair_probability(Pair::Mixed);
  e.fake_entry_passes_b = (mix.probability(Pair::Mixed, 1, 0) + mix.probability(Pair::Mixed, 1, 1)) / mixed;

  const double zeros_and_b1 = mix.probability(Pair::Zeros, 1, 0) + mix.probability(Pair::Zeros, 1, 1);
  e.fake_entry_passes_c_vs_la = zeros_and_b1 / mix.b_probability(1);

  e.altered_entry_passes_c = (mix.probability(Pair::Mixed, 0, 1) + mix.probability(Pair::Mixed, 1, 1)) / mixed;
  e.expected_double_fraction = mix.pair_probability(Pair::Zeros);

  // Ordered observation (x, y): x from j1, y from A's other qubit.
  const auto& joint = singlet_table();
  double best = 0.0;
  for (Bit target_b = 0; target_b < 2; ++target_b) {
    for (Bit x = 0; x < 2; ++x) {
      const Bit y = 1 - x;
      double num = 0.0, den = 0.0;
      for (auto [assignment, w] : {std::pair{Assignment::HoldsFirstSecond, p_first_second},
                                   std::pair{Assignment::HoldsFirstThird, 1.0 - p_first_second}}) {
        for (std::uint64_t i = 0; i < joint.size(); ++i) {
          if (bit_of(i, 1) != x || bit_of(i, a_second_slot(assignment)) != y) continue;
          den += w * joint[i];
          if (bit_of(i, b_slot(assignment)) == target_b) num += w * joint[i];
        }
      }
      if (den > 0.0) best = std::max(best, num / den);
    }
  }
  e.fake_entry_passes_b_if_ordered = best;
  return e;
}

double balanced_outcome_probability(const StateVector& state, const MeasurementDirection& direction) {
  const auto probs = joint_distribution(state, direction);
  const int half = state.num_qubits() / 2;
  double sum = 0.0;
  for (std::uint64_t i = 0; i < probs.size(); ++i) {
    if (std::popcount(i) == half && state.num_qubits() % 2 == 0) sum += probs[i];
  }
  return sum;
}

double sphere_average_balanced_probability(const StateVector& state, int phi_steps) {
  if (phi_steps < 1) throw DomainError("quadrature needs at least one azimuthal step");
  // Outcome probabilities are trigonometric polynomials in (theta, phi) of
  // degree <= n, so Gauss-Legendre in theta and a uniform phi grid are exact
  // to rounding for the register sizes used here.
  auto ring = [&](double theta) {
    double sum = 0.0;
    for (int k = 0; k < phi_steps; ++k) {
      const double phi = 2.0 * std::numbers::pi * (k + 0.5) / phi_steps;
      sum += balanced_outcome_probability(state, MeasurementDirection(theta, phi));
    }
    return sum / phi_steps * std::sin(theta);
  };
  return 0.5 * boost::math::quadrature::gauss<double, 30>::integrate(ring, 0.0, std::numbers::pi);
}

Fraction approximate_fraction(double value, std::int64_t max_denominator) {
  // Continued-fraction convergents.
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = value;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_real = std::floor(x);
    if (std::abs(a_real) > 1e15) break;
    const auto a = static_cast<std::int64_t>(a_real);
    const std::int64_t q2 = q0 + a * q1;
    if (q2 > max_denominator) break;
    const std::int64_t p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = x - a_real;
    if (std::abs(value - static_cast<double>(p1) / static_cast<double>(q1)) < 1e-13 || frac < 1e-13) break;
    x = 1.0 / frac;
  }
  if (q1 == 0) return {static_cast<std::int64_t>(std::llround(value)), 1};
  return {p1, q1};
}

std::string format_fraction(double value) {
  const Fraction f = approximate_fraction(value);
  std::ostringstream out;
  if (std::abs(value - static_cast<double>(f.numerator) / static_cast<double>(f.denominator)) > 1e-12) {
    out.precision(17);
    out << value;
    return out.str();
  }
  out << f.numerator;
  if (f.denominator != 1) out << '/' << f.denominator;
  return out.str();
}

std::string dump_tables(double p_first_second) {
  std::ostringstream out;
  out.precision(17);
  auto line = [&](const std::string& label, double value) {
    out << label << " = " << format_fraction(value) << "  [" << value << "]\n";
  };

  out << "# four-qubit singlet amplitudes (index bitstring re im)\n" << make_singlet(4).format_rows();
  out << "# two-qubit singlet amplitudes (index bitstring re im)\n" << make_singlet(2).format_rows();

  out << "# common-axis outcome distribution, four-qubit singlet\n";
  const auto joint = singlet_table();
  for (std::uint64_t i = 0; i < joint.size(); ++i) {
    if (joint[i] > 0.0) line("P(" + to_bitstring(i, 4) + ")", joint[i]);
  }

  const std::pair<Assignment, std::string> labelled[] = {{Assignment::HoldsFirstSecond, "holds j1,j2"},
                                                        {Assignment::HoldsFirstThird, "holds j1,j3"}};
  for (const auto& [assignment, label] : labelled) {
    out << "# round distribution, A " << label << "\n";
    const RoundDistribution d = round_distribution(assignment);
    for (Pair a : {Pair::Zeros, Pair::Mixed, Pair::Ones}) {
      line("P(A_pair=" + std::string(to_string(a)) + " | " + label + ")", d.pair_probability(a));
    }
    for (Pair a : {Pair::Zeros, Pair::Mixed, Pair::Ones})
      for (Bit b = 0; b < 2; ++b)
        for (Bit c = 0; c < 2; ++c) {
          const double p = d.probability(a, b, c);
          if (p > 0.0) {
            line("P(A_pair=" + std::string(to_string(a)) + ", B=" + std::to_string(b) + ", C=" + std::to_string(c) +
                     " | " + label + ")",
                 p);
          }
        }
  }

  out << "# round distribution, assignment mixture P(holds j1,j2) = " << format_fraction(p_first_second) << "\n";
  const RoundDistribution mix = round_distribution_mixture(p_first_second);
  for (Pair a : {Pair::Zeros, Pair::Mixed, Pair::Ones}) {
    line("P(A_pair=" + std::string(to_string(a)) + " | mixture)", mix.pair_probability(a));
  }

  out << "# escape probabilities\n";
  const EscapeProbabilities e = escape_probabilities(p_first_second);
  line("P(fake entry passes B)", e.fake_entry_passes_b);
  line("P(forged entry passes C vs l_AC)", e.fake_entry_passes_c_vs_la);
  line("P(altered entry passes C vs l_C)", e.altered_entry_passes_c);
  line("expected fraction of A_pair=mm positions", e.expected_double_fraction);
  line("P(fake entry passes B | A knows j1 outcome, best case)", e.fake_entry_passes_b_if_ordered);

  out << "# source checks, random axis\n";
  line("P(balanced | source 0011)", sphere_average_balanced_probability(StateVector::from_bitstring("0011")));
  line("P(balanced | source 0000)", sphere_average_balanced_probability(StateVector::from_bitstring("0000")));
  return out.str();
}

}  // namespace liarq
