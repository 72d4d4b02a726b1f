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

// Helpers shared by the test binaries. Nothing here calls into the code under
// test except through its public types.

#ifndef LIARQ_TESTS_SUPPORT_HPP
#define LIARQ_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace liarq::testing {

// Four-qubit singlet amplitudes written out term by term:
// (2|0011> - |0101> - |0110> - |1001> - |1010> + 2|1100>) / (2 sqrt 3).
inline std::vector<double> literal_singlet4() {
  const double c = 1.0 / (2.0 * std::sqrt(3.0));
  std::vector<double> a(16, 0.0);
  a[0b0011] = 2 * c;
  a[0b0101] = -c;
  a[0b0110] = -c;
  a[0b1001] = -c;
  a[0b1010] = -c;
  a[0b1100] = 2 * c;
  return a;
}

// (|01> - |10>) / sqrt 2
inline std::vector<double> literal_singlet2() {
  const double c = 1.0 / std::sqrt(2.0);
  return {0.0, c, -c, 0.0};
}

// Exact round table from the literal amplitudes when A holds slots 1 and
// a_second, B holds b_slot and C holds slot 4. Cell pair*4 + b*2 + c, where
// pair counts A's ones.
inline std::vector<double> literal_round_table(int a_second, int b_slot) {
  const auto amps = literal_singlet4();
  std::vector<double> table(12, 0.0);
  auto bit = [](int index, int slot) { return (index >> (4 - slot)) & 1; };
  for (int i = 0; i < 16; ++i) {
    const int cell = (bit(i, 1) + bit(i, a_second)) * 4 + bit(i, b_slot) * 2 + bit(i, 4);
    table[static_cast<std::size_t>(cell)] += amps[static_cast<std::size_t>(i)] * amps[static_cast<std::size_t>(i)];
  }
  return table;
}

inline double total_variation(std::span<const double> p, std::span<const double> q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return 0.5 * sum;
}

// Pearson chi-square goodness-of-fit p-value over cells with nonzero
// expectation.
inline double chi_square_p_value(std::span<const std::uint64_t> observed, std::span<const double> probabilities) {
  std::uint64_t n = 0;
  for (auto o : observed) n += o;
  double stat = 0.0;
  int cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (probabilities[i] <= 0.0) continue;
    const double expected = probabilities[i] * static_cast<double>(n);
    stat += (static_cast<double>(observed[i]) - expected) * (static_cast<double>(observed[i]) - expected) / expected;
    ++cells;
  }
  boost::math::chi_squared dist(cells - 1);
  return boost::math::cdf(boost::math::complement(dist, stat));
}

inline double binomial_sigma(double p, double n) { return std::sqrt(p * (1.0 - p) / n); }

}  // namespace liarq::testing

#endif  // LIARQ_TESTS_SUPPORT_HPP
