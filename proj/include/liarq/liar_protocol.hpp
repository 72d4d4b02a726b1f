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

// List generation from a verified pool and the two consistency checks of the
// liar-detection protocol: B's acceptance test and C's adjudication.

#ifndef LIARQ_LIAR_PROTOCOL_HPP
#define LIARQ_LIAR_PROTOCOL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "liarq/channels.hpp"
#include "liarq/distribute_test.hpp"
#include "liarq/messages.hpp"
#include "liarq/oracle.hpp"

namespace liarq {

// Position j (1-based) of every list belongs to pool system j.
struct PartyLists {
  std::vector<Pair> a;
  std::vector<Bit> b;
  std::vector<Bit> c;

  std::size_t size() const { return a.size(); }
};

// First position breaking "A has mm => B and C both have 1-m", or nullopt.
std::optional<std::uint32_t> first_correlation_violation(const PartyLists& lists);

// Every party measures its qubits of each pool system along an axis C
// announces. Throws DomainError for an empty pool.
PartyLists generate_lists(Session& session, std::span<const PoolEntry> pool, DirectionPolicy policy, Rng& rng);

// Positions j where l_A[j] = {m, m}.
PositionList extract_positions(std::span<const Pair> l_a, Bit m);

struct AcceptanceThreshold {
  // A claimed list shorter than min_fraction * expected_fraction * L is
  // rejected.
  double min_fraction = 0.5;
  double expected_fraction = 5.0 / 24.0;
  // Off by default: C additionally checks forwarded positions against l_C.
  bool cross_check_forwarded = false;

  double minimum_length(std::size_t list_length) const {
    return min_fraction * expected_fraction * static_cast<double>(list_length);
  }
  double expected_length(std::size_t list_length) const {
    return expected_fraction * static_cast<double>(list_length);
  }

  // expected_fraction taken from the oracle for the given assignment mixture.
  static AcceptanceThreshold for_mixture(double p_first_second, double min_fraction = 0.5);
};

struct BDecision {
  bool accepted = false;
  std::optional<RejectReason> reason;
  std::uint32_t position = 0;  // offending position for INCOMPATIBLE
};

// B's test of A's claimed m-double positions against his own list.
BDecision b_accepts(Bit m_ab, const PositionList& claimed, std::span<const Bit> l_b,
                    const AcceptanceThreshold& threshold);

enum class VerdictValue : std::uint8_t {
  Consistent,
  AIsLiar,
  BIsLiar,
  BRejectedAtStepIII,
  // Messages conflict but every check passed: the cheater escaped.
  Unresolved,
};

enum class Evidence : std::uint8_t {
  None,
  FullListLength,          // l_AC has the wrong length
  FullListInconsistent,    // l_AC claims bb where l_C has b
  ForwardedOutOfRange,
  ForwardedInconsistent,   // forwarded position is not an m_BC double in l_AC
  ForwardedTooShort,
  ForwardedContradictsLc,  // optional cross-check
  RejectedIncompatible,
  RejectedTooShort,
};

struct Verdict {
  VerdictValue value = VerdictValue::Consistent;
  Evidence evidence = Evidence::None;
  std::uint32_t position = 0;
  int stage = 0;  // 1 or 2 when an adjudication check fired
};

std::string_view to_string(VerdictValue value);
std::string_view to_string(Evidence evidence);

// First position where a claimed double bb in l_AC meets b in l_C.
std::optional<std::uint32_t> first_inconsistency(std::span<const Pair> l_ac, std::span<const Bit> l_c);

// C's ruling when m_AC and m_BC conflict. Stage 1 checks l_AC against l_C and
// convicts A; stage 2 checks the forwarded list against l_AC and its length
// and convicts B. Returns Consistent without checks if the messages agree.
Verdict c_adjudicate(Bit m_ac, std::span<const Pair> l_ac, Bit m_bc, const PositionList& forwarded,
                     std::span<const Bit> l_c, const AcceptanceThreshold& threshold);

}  // namespace liarq

#endif  // LIARQ_LIAR_PROTOCOL_HPP
