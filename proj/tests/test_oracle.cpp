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

#include <doctest.h>

#include <array>
#include <cmath>

#include "liarq/oracle.hpp"
#include "support.hpp"

using namespace liarq;

namespace {

// Brute force over the written-out amplitudes, independent of qstate.
struct BruteForce {
  std::vector<double> p;
  BruteForce() {
    for (double a : testing::literal_singlet4()) p.push_back(a * a);
  }
  static int bit(int index, int slot) { return (index >> (4 - slot)) & 1; }

  // P(event) under a given assignment, event sees (q1..q4, a2_slot, b_slot).
  template <typename F>
  double prob(int a2, int b, F&& event) const {
    double sum = 0.0;
    for (int i = 0; i < 16; ++i) {
      if (event(bit(i, 1), bit(i, a2), bit(i, b), bit(i, 4))) sum += p[static_cast<std::size_t>(i)];
    }
    return sum;
  }
  template <typename F>
  double mixture(F&& event) const {
    return 0.5 * prob(2, 3, event) + 0.5 * prob(3, 2, event);
  }
};

}  // namespace

TEST_CASE("round distribution per assignment") {
  const auto d12 = round_distribution(Assignment::HoldsFirstSecond);
  CHECK(d12.pair_probability(Pair::Zeros) == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(d12.pair_probability(Pair::Ones) == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(d12.pair_probability(Pair::Mixed) == doctest::Approx(1.0 / 3).epsilon(1e-12));

  const auto d13 = round_distribution(Assignment::HoldsFirstThird);
  CHECK(d13.pair_probability(Pair::Zeros) == doctest::Approx(1.0 / 12).epsilon(1e-12));
  CHECK(d13.pair_probability(Pair::Ones) == doctest::Approx(1.0 / 12).epsilon(1e-12));
  CHECK(d13.pair_probability(Pair::Mixed) == doctest::Approx(5.0 / 6).epsilon(1e-12));

  for (const auto* d : {&d12, &d13}) {
    CHECK(d->total() == doctest::Approx(1.0).epsilon(1e-12));
    // A holds 00 => B and C both hold 1, and mirrored.
    const double z = d->pair_probability(Pair::Zeros);
    CHECK(d->probability(Pair::Zeros, 1, 1) / z == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d->probability(Pair::Ones, 0, 0) / d->pair_probability(Pair::Ones) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("round distributions agree with brute force over the literal state") {
  const BruteForce bf;
  for (auto [assignment, a2, b] : {std::tuple{Assignment::HoldsFirstSecond, 2, 3},
                                   std::tuple{Assignment::HoldsFirstThird, 3, 2}}) {
    const auto d = round_distribution(assignment);
    for (Pair pair : {Pair::Zeros, Pair::Mixed, Pair::Ones})
      for (Bit bb = 0; bb < 2; ++bb)
        for (Bit cc = 0; cc < 2; ++cc) {
          const double expected = bf.prob(a2, b, [&](int q1, int qa, int qb, int q4) {
            return q1 + qa == static_cast<int>(pair) && qb == bb && q4 == cc;
          });
          CHECK(std::abs(d.probability(pair, bb, cc) - expected) < 1e-12);
        }
  }
}

TEST_CASE("support has two zeros and two ones") {
  for (auto assignment : {Assignment::HoldsFirstSecond, Assignment::HoldsFirstThird}) {
    const auto d = round_distribution(assignment);
    for (Pair pair : {Pair::Zeros, Pair::Mixed, Pair::Ones})
      for (Bit b = 0; b < 2; ++b)
        for (Bit c = 0; c < 2; ++c) {
          if (d.probability(pair, b, c) > 0.0) CHECK(static_cast<int>(pair) + b + c == 2);
        }
  }
}

TEST_CASE("oracle tables are symmetric under global 0<->1 relabelling") {
  auto flip = [](Pair p) { return static_cast<Pair>(2 - static_cast<int>(p)); };
  for (auto assignment : {Assignment::HoldsFirstSecond, Assignment::HoldsFirstThird}) {
    const auto d = round_distribution(assignment);
    for (Pair pair : {Pair::Zeros, Pair::Mixed, Pair::Ones})
      for (Bit b = 0; b < 2; ++b)
        for (Bit c = 0; c < 2; ++c) {
          CHECK(std::abs(d.probability(pair, b, c) - d.probability(flip(pair), 1 - b, 1 - c)) < 1e-12);
        }
  }
}

TEST_CASE("escape probabilities") {
  const auto e = escape_probabilities();
  CHECK(e.fake_entry_passes_b == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(e.fake_entry_passes_c_vs_la == doctest::Approx(5.0 / 12).epsilon(1e-12));
  CHECK(e.altered_entry_passes_c == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(e.expected_double_fraction == doctest::Approx(5.0 / 24).epsilon(1e-12));
  CHECK(e.fake_entry_passes_b_if_ordered == doctest::Approx(5.0 / 7).epsilon(1e-12));

  // Same quantities by brute force.
  const BruteForce bf;
  const double mixed = bf.mixture([](int q1, int qa, int, int) { return q1 != qa; });
  const double mixed_b1 = bf.mixture([](int q1, int qa, int qb, int) { return q1 != qa && qb == 1; });
  CHECK(mixed_b1 / mixed == doctest::Approx(0.5).epsilon(1e-12));
  const double b1 = bf.mixture([](int, int, int qb, int) { return qb == 1; });
  const double zeros_b1 = bf.mixture([](int q1, int qa, int qb, int) { return q1 == 0 && qa == 0 && qb == 1; });
  CHECK(zeros_b1 / b1 == doctest::Approx(5.0 / 12).epsilon(1e-12));
  const double ordered = bf.mixture([](int q1, int qa, int qb, int) { return q1 == 1 && qa == 0 && qb == 1; }) /
                         bf.mixture([](int q1, int qa, int, int) { return q1 == 1 && qa == 0; });
  CHECK(ordered == doctest::Approx(5.0 / 7).epsilon(1e-12));
}

TEST_CASE("escape probabilities respond to the assignment mixture") {
  CHECK(escape_probabilities(1.0).expected_double_fraction == doctest::Approx(1.0 / 3));
  CHECK(escape_probabilities(0.0).expected_double_fraction == doctest::Approx(1.0 / 12));
  // Under either pure assignment a fake mixed entry still passes B half the time.
  CHECK(escape_probabilities(1.0).fake_entry_passes_b == doctest::Approx(0.5));
  CHECK(escape_probabilities(0.0).fake_entry_passes_b == doctest::Approx(0.5));
}

TEST_CASE("oracle tables are reproduced by sampling through the state engine") {
  Rng rng(42);
  constexpr int shots = 100000;
  const std::vector<int> all{1, 2, 3, 4};
  for (auto assignment : {Assignment::HoldsFirstSecond, Assignment::HoldsFirstThird}) {
    const auto d = round_distribution(assignment);
    std::array<double, 12> counts{};
    const StateVector s = make_singlet(4);
    std::vector<std::uint8_t> bits(4);
    for (int i = 0; i < shots; ++i) {
      StateVector copy = s;
      measure_in_place(copy, all, MeasurementDirection::random(rng), rng, bits);
      const int pair = bits[0] + bits[static_cast<std::size_t>(a_second_slot(assignment) - 1)];
      const int b = bits[static_cast<std::size_t>(b_slot(assignment) - 1)];
      counts[static_cast<std::size_t>(pair * 4 + b * 2 + bits[3])] += 1.0;
    }
    for (int pair = 0; pair < 3; ++pair)
      for (Bit b = 0; b < 2; ++b)
        for (Bit c = 0; c < 2; ++c) {
          const double p = d.probability(static_cast<Pair>(pair), b, c);
          const double f = counts[static_cast<std::size_t>(pair * 4 + b * 2 + c)] / shots;
          CHECK(std::abs(f - p) <= 3.0 * testing::binomial_sigma(p, shots) + 1e-12);
        }
  }
}

TEST_CASE("balanced probability of product sources under random axes") {
  // For |0011> along an axis with u = cos(theta), the balanced probability is
  // c^4 + 4c^2 s^2 + s^4 with c = (1+u)/2, s = (1-u)/2; its sphere average is
  // (6 + 4/3 + 6/5) / 16 = 8/15.
  CHECK(sphere_average_balanced_probability(StateVector::from_bitstring("0011")) ==
        doctest::Approx(8.0 / 15).epsilon(1e-12));
  CHECK(balanced_outcome_probability(StateVector::from_bitstring("0011"), MeasurementDirection{}) ==
        doctest::Approx(1.0));
  CHECK(balanced_outcome_probability(StateVector::from_bitstring("0000"), MeasurementDirection{}) == 0.0);
  CHECK(sphere_average_balanced_probability(make_singlet(4)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fractions") {
  CHECK(format_fraction(5.0 / 24) == "5/24");
  CHECK(format_fraction(0.5) == "1/2");
  CHECK(format_fraction(1.0) == "1");
  CHECK(format_fraction(1.0 / 3 + 1e-16) == "1/3");
  CHECK(format_fraction(std::sqrt(2.0)).find('/') == std::string::npos);
}

TEST_CASE("dump contains the headline values") {
  const std::string dump = dump_tables();
  CHECK(dump.find("P(A_pair=00 | holds j1,j2) = 1/3") != std::string::npos);
  CHECK(dump.find("P(A_pair=00 | holds j1,j3) = 1/12") != std::string::npos);
  CHECK(dump.find("P(fake entry passes B) = 1/2") != std::string::npos);
  CHECK(dump.find("P(forged entry passes C vs l_AC) = 5/12") != std::string::npos);
  CHECK(dump.find("3 0011 0.57735026918962") != std::string::npos);
  CHECK(dump.find("5 0101 -0.28867513459481") != std::string::npos);
}
