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

// Exact probabilities for the four-qubit singlet as seen through the
// protocol's slot assignments. Everything here is computed by enumerating the
// joint outcome table of make_singlet(4); nothing is sampled.

#ifndef LIARQ_ORACLE_HPP
#define LIARQ_ORACLE_HPP

#include <array>
#include <cstdint>
#include <string>

#include "liarq/qstate.hpp"
#include "liarq/types.hpp"

namespace liarq {

inline constexpr double kDefaultMixture = 0.5;

// Joint law of (A's unordered pair, B's bit, C's bit) for one round measured
// along a common axis.
class RoundDistribution {
 public:
  double probability(Pair a_pair, Bit b_bit, Bit c_bit) const { return table_[index(a_pair, b_bit, c_bit)]; }
  double pair_probability(Pair a_pair) const;
  double b_probability(Bit b_bit) const;
  double total() const;

  // Adds weight * other into this table.
  void accumulate(const RoundDistribution& other, double weight);
  void add(Pair a_pair, Bit b_bit, Bit c_bit, double p) { table_[index(a_pair, b_bit, c_bit)] += p; }

 private:
  static std::size_t index(Pair a, Bit b, Bit c) { return static_cast<std::size_t>(a) * 4 + b * 2u + c; }
  std::array<double, 12> table_{};
};

RoundDistribution round_distribution(Assignment assignment);
// Mixture with probability p_first_second of Assignment::HoldsFirstSecond.
RoundDistribution round_distribution_mixture(double p_first_second = kDefaultMixture);

struct EscapeProbabilities {
  // P(l_B = 1-m | A's pair is mixed): a fabricated entry survives B's check.
  double fake_entry_passes_b = 0.0;
  // P(A's pair = mm | l_B = 1-m): a position forged by B survives the check
  // against A's full list.
  double fake_entry_passes_c_vs_la = 0.0;
  // P(l_C = 1-b | A's pair is mixed): a mixed entry rewritten as bb survives
  // the check against C's list.
  double altered_entry_passes_c = 0.0;
  // P(A's pair = mm), for either m.
  double expected_double_fraction = 0.0;
  // Best per-entry B-escape if A could tell which outcome came from j1.
  double fake_entry_passes_b_if_ordered = 0.0;
};

EscapeProbabilities escape_probabilities(double p_first_second = kDefaultMixture);

// Probability that measuring every qubit along direction gives exactly n/2
// zeros.
double balanced_outcome_probability(const StateVector& state, const MeasurementDirection& direction);

// Average of balanced_outcome_probability over axes uniform on the sphere.
double sphere_average_balanced_probability(const StateVector& state, int phi_steps = 16);

struct Fraction {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
};

// Best rational approximation with denominator <= max_denominator.
Fraction approximate_fraction(double value, std::int64_t max_denominator = 10000);
std::string format_fraction(double value);

// Human-readable dump of every table above.
std::string dump_tables(double p_first_second = kDefaultMixture);

}  // namespace liarq

#endif  // LIARQ_ORACLE_HPP
