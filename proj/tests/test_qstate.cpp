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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "liarq/errors.hpp"
#include "liarq/qstate.hpp"
#include "support.hpp"

using namespace liarq;

namespace {

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Sign-insensitive comparison against a real reference vector.
double max_deviation_up_to_sign(const StateVector& s, const std::vector<double>& ref) {
  double plus = 0.0, minus = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    plus = std::max(plus, std::abs(s[i] - Complex(ref[i])));
    minus = std::max(minus, std::abs(s[i] + Complex(ref[i])));
  }
  return std::min(plus, minus);
}

}  // namespace

TEST_CASE("two-qubit singlet has amplitudes (0, 1/sqrt2, -1/sqrt2, 0)") {
  const StateVector s = make_singlet(2);
  REQUIRE(s.dimension() == 4);
  const auto ref = testing::literal_singlet2();
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(s[i] - Complex(ref[i])) < kExactTolerance);
}

TEST_CASE("four-qubit singlet matches the written-out expansion") {
  const StateVector s = make_singlet(4);
  CHECK(max_deviation_up_to_sign(s, testing::literal_singlet4()) < kExactTolerance);
  // The construction fixes the sign: +2c on |0011>.
  CHECK(s[0b0011].real() > 0.0);
  CHECK(std::abs(s[3] - s[12]) < kExactTolerance);
}

TEST_CASE("z counts zeros in the first half") {
  CHECK(count_leading_half_zeros(0b01, 2) == 1);
  CHECK(count_leading_half_zeros(0b1100, 4) == 0);
  CHECK(count_leading_half_zeros(0b010110, 6) == 2);
}

TEST_CASE("singlet support is exactly the balanced bitstrings") {
  for (int n : {2, 4, 6, 8, 10}) {
    const StateVector s = make_singlet(n);
    std::uint64_t nonzero = 0;
    for (std::uint64_t i = 0; i < s.dimension(); ++i) {
      const bool balanced = std::popcount(i) == n / 2;
      if (balanced) {
        CHECK(std::abs(s[i]) > 0.0);
        ++nonzero;
      } else {
        CHECK(s[i] == Complex{});
      }
    }
    CHECK(nonzero == binomial(n, n / 2));
    CHECK(std::abs(s.norm_squared() - 1.0) < kExactTolerance);
  }
}

TEST_CASE("make_singlet rejects bad sizes") {
  CHECK_THROWS_AS(make_singlet(3), DomainError);
  CHECK_THROWS_AS(make_singlet(0), DomainError);
  CHECK_THROWS_AS(make_singlet(-2), DomainError);
  CHECK_THROWS_AS(make_singlet(12), ResourceError);
  CHECK_NOTHROW(make_singlet(12, 12));
}

TEST_CASE("state vectors validate their invariants") {
  CHECK_THROWS_AS(StateVector::from_amplitudes({1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(StateVector::from_amplitudes({1.0, 0.0, 0.0}), DomainError);
  CHECK_NOTHROW(StateVector::from_amplitudes({std::sqrt(0.5), Complex(0.0, std::sqrt(0.5))}));
  CHECK(StateVector::from_bitstring("0011")[3] == Complex(1.0));
  CHECK_THROWS_AS(StateVector::from_bitstring("01x1"), DomainError);
}

TEST_CASE("single-qubit unitaries") {
  CHECK_THROWS_AS(SingleQubitUnitary({1.0, 1.0, 0.0, 1.0}), DomainError);

  SUBCASE("identity leaves amplitudes unchanged") {
    const StateVector s = make_singlet(4);
    const StateVector t = apply_single_qubit(s, 3, SingleQubitUnitary::identity());
    for (std::size_t i = 0; i < s.dimension(); ++i) CHECK(s[i] == t[i]);
  }
  SUBCASE("bit flip on qubit 2 of |00> gives |01>") {
    const StateVector t = apply_single_qubit(StateVector::basis(2, 0), 2, SingleQubitUnitary::pauli_x());
    CHECK(t[0b01] == Complex(1.0));
  }
  SUBCASE("u then u-dagger restores the state") {
    Rng rng(11);
    const StateVector s = make_singlet(6);
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = SingleQubitUnitary::random(rng);
      const int q = 1 + trial % 6;
      const StateVector back = apply_single_qubit(apply_single_qubit(s, q, u), q, u.adjoint());
      for (std::size_t i = 0; i < s.dimension(); ++i) CHECK(std::abs(back[i] - s[i]) < kExactTolerance);
      CHECK(std::abs(apply_single_qubit(s, q, u).norm_squared() - 1.0) < kExactTolerance);
    }
  }
  SUBCASE("out of range qubit") {
    CHECK_THROWS_AS(apply_single_qubit(make_singlet(2), 0, SingleQubitUnitary::identity()), DomainError);
    CHECK_THROWS_AS(apply_single_qubit(make_singlet(2), 3, SingleQubitUnitary::identity()), DomainError);
  }
}

TEST_CASE("random unitaries are unitary") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto u = SingleQubitUnitary::random(rng);
    CHECK_NOTHROW(SingleQubitUnitary({u(0, 0), u(0, 1), u(1, 0), u(1, 1)}));
  }
}

TEST_CASE("N-lateral invariance of the singlet family") {
  Rng rng(2024);
  for (int n : {2, 4, 6}) {
    const StateVector s = make_singlet(n);
    CHECK(fidelity(s, apply_bilateral(s, SingleQubitUnitary::identity())) == doctest::Approx(1.0).epsilon(1e-15));
    for (int trial = 0; trial < 100; ++trial) {
      const double f = fidelity(s, apply_bilateral(s, SingleQubitUnitary::random(rng)));
      CHECK(f >= 1.0 - kInvarianceTolerance);
    }
  }
}

TEST_CASE("global bit flip maps the four-qubit singlet to itself exactly") {
  const StateVector s = make_singlet(4);
  const StateVector t = apply_bilateral(s, SingleQubitUnitary::pauli_x());
  for (std::size_t i = 0; i < 16; ++i) CHECK(std::abs(t[i] - s[i]) < kExactTolerance);
}

TEST_CASE("a non-singlet state is not invariant") {
  Rng rng(5);
  const StateVector s = StateVector::from_bitstring("0011");
  double worst = 1.0;
  for (int i = 0; i < 10; ++i) worst = std::min(worst, fidelity(s, apply_bilateral(s, SingleQubitUnitary::random(rng))));
  CHECK(worst < 0.99);
}

TEST_CASE("measurement directions") {
  CHECK(MeasurementDirection::computational().is_computational());
  CHECK_THROWS_AS(MeasurementDirection(-0.1, 0.0), DomainError);
  CHECK_THROWS_AS(MeasurementDirection(0.5, 2.0 * std::numbers::pi), DomainError);
  // Up along +x is (|0> + |1>)/sqrt2: measuring it along +x always gives 0.
  const MeasurementDirection x(std::numbers::pi / 2, 0.0);
  const StateVector plus = StateVector::from_amplitudes({std::sqrt(0.5), std::sqrt(0.5)});
  const auto dist = joint_distribution(plus, x);
  CHECK(dist[0] == doctest::Approx(1.0).epsilon(1e-12));
  Rng rng(1);
  const auto r = measure_qubits(plus, std::vector<int>{1}, x, rng);
  CHECK(r.bits[0] == 0);
  CHECK(fidelity(r.collapsed, plus) == doctest::Approx(1.0));
}

TEST_CASE("joint distribution of the four-qubit singlet") {
  const auto p = joint_distribution(make_singlet(4), MeasurementDirection::computational());
  const auto lit = testing::literal_singlet4();
  for (std::size_t i = 0; i < 16; ++i) CHECK(std::abs(p[i] - lit[i] * lit[i]) < kExactTolerance);
  CHECK(p[0b0011] == doctest::Approx(1.0 / 3));
  CHECK(p[0b0101] == doctest::Approx(1.0 / 12));
}

TEST_CASE("joint distribution of the singlet is direction independent") {
  Rng rng(9);
  for (int n : {2, 4, 6}) {
    const StateVector s = make_singlet(n);
    const auto reference = joint_distribution(s, MeasurementDirection::computational());
    for (int trial = 0; trial < 25; ++trial) {
      const auto p = joint_distribution(s, MeasurementDirection::random(rng));
      double worst = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) worst = std::max(worst, std::abs(p[i] - reference[i]));
      CHECK(worst < kInvarianceTolerance);
    }
  }
  const auto two = joint_distribution(make_singlet(2), MeasurementDirection(1.0, 2.0));
  CHECK(two[0b01] == doctest::Approx(0.5));
  CHECK(two[0b10] == doctest::Approx(0.5));
}

TEST_CASE("product state distribution") {
  const auto p = joint_distribution(StateVector::from_bitstring("0011"), MeasurementDirection::computational());
  CHECK(p[3] == 1.0);
  double sum = 0.0;
  for (double x : p) sum += x;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("measuring qubit 1 of |01> gives 0 and leaves |01>") {
  Rng rng(4);
  const StateVector s = StateVector::from_bitstring("01");
  for (int i = 0; i < 20; ++i) {
    const auto r = measure_qubits(s, std::vector<int>{1}, MeasurementDirection::computational(), rng);
    CHECK(r.bits[0] == 0);
    CHECK(r.collapsed[1] == Complex(1.0));
  }
}

TEST_CASE("measurement errors") {
  Rng rng(1);
  const StateVector s = make_singlet(4);
  CHECK_THROWS_AS(measure_qubits(s, std::vector<int>{1, 1}, MeasurementDirection{}, rng), DomainError);
  CHECK_THROWS_AS(measure_qubits(s, std::vector<int>{5}, MeasurementDirection{}, rng), DomainError);
  CHECK_THROWS_AS(measure_qubits(s, std::vector<int>{}, MeasurementDirection{}, rng), DomainError);
}

TEST_CASE("measurement collapse is consistent and normalized") {
  Rng rng(77);
  const StateVector s = make_singlet(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto dir = MeasurementDirection::random(rng);
    const auto first = measure_qubits(s, std::vector<int>{2, 4}, dir, rng);
    CHECK(std::abs(first.collapsed.norm_squared() - 1.0) < kExactTolerance);
    // Re-measuring the same qubits along the same axis repeats the outcome.
    const auto again = measure_qubits(first.collapsed, std::vector<int>{2, 4}, dir, rng);
    CHECK(again.bits == first.bits);
    // The rest of the register completes a balanced record.
    const auto rest = measure_qubits(first.collapsed, std::vector<int>{1, 3}, dir, rng);
    CHECK(first.bits[0] + first.bits[1] + rest.bits[0] + rest.bits[1] == 2);
  }
}

TEST_CASE("sampling is reproducible for a fixed seed") {
  const StateVector s = make_singlet(4);
  const std::vector<int> all{1, 2, 3, 4};
  Rng a(123), b(123);
  for (int i = 0; i < 100; ++i) {
    const auto dir_a = MeasurementDirection::random(a);
    const auto dir_b = MeasurementDirection::random(b);
    CHECK(dir_a == dir_b);
    CHECK(measure_qubits(s, all, dir_a, a).bits == measure_qubits(s, all, dir_b, b).bits);
  }
}

TEST_CASE("sampled frequencies match the exact table") {
  Rng rng(31337);
  for (int n : {2, 4, 6}) {
    const StateVector s = make_singlet(n);
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) all[static_cast<std::size_t>(q)] = q + 1;
    const auto dir = MeasurementDirection::random(rng);
    const auto exact = joint_distribution(s, dir);
    std::vector<double> freq(exact.size(), 0.0);
    constexpr int shots = 100000;
    std::vector<std::uint8_t> bits(all.size());
    for (int i = 0; i < shots; ++i) {
      StateVector copy = s;
      measure_in_place(copy, all, dir, rng, bits);
      std::uint64_t index = 0;
      int zeros = 0;
      for (auto b : bits) {
        index = (index << 1) | b;
        zeros += b == 0;
      }
      REQUIRE(zeros == n / 2);
      freq[index] += 1.0 / shots;
    }
    CHECK(testing::total_variation(freq, exact) < 0.01);
  }
}

TEST_CASE("format_rows prints index bitstring re im") {
  const std::string rows = make_singlet(2).format_rows();
  CHECK(rows.find("1 01 0.7071067811865474") == 0);
  CHECK(rows.find("2 10 -0.7071067811865474") != std::string::npos);
}
