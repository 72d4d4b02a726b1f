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

#ifndef LIARQ_TYPES_HPP
#define LIARQ_TYPES_HPP

#include <cstdint>
#include <string_view>

namespace liarq {

enum class PartyId : std::uint8_t { A, B, C };

inline constexpr std::string_view to_string(PartyId p) {
  switch (p) {
    case PartyId::A: return "A";
    case PartyId::B: return "B";
    case PartyId::C: return "C";
  }
  return "?";
}

using Bit = std::uint8_t;

// A's two outcomes for one system, unordered. The enumerator value is the
// number of ones.
enum class Pair : std::uint8_t { Zeros = 0, Mixed = 1, Ones = 2 };

inline constexpr Pair pair_from_bits(Bit a, Bit b) { return static_cast<Pair>(a + b); }
inline constexpr Pair double_of(Bit m) { return m ? Pair::Ones : Pair::Zeros; }
inline constexpr bool is_double_of(Pair p, Bit m) { return p == double_of(m); }

inline constexpr std::string_view to_string(Pair p) {
  switch (p) {
    case Pair::Zeros: return "00";
    case Pair::Mixed: return "01";
    case Pair::Ones: return "11";
  }
  return "??";
}

// Which slots of system j A holds: (j1, j2) with B on j3, or (j1, j3) with B
// on j2. C always keeps j4. Only C knows the value.
enum class Assignment : std::uint8_t { HoldsFirstSecond, HoldsFirstThird };

inline constexpr int b_slot(Assignment a) { return a == Assignment::HoldsFirstSecond ? 3 : 2; }
inline constexpr int a_second_slot(Assignment a) { return a == Assignment::HoldsFirstSecond ? 2 : 3; }

}  // namespace liarq

#endif  // LIARQ_TYPES_HPP
