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

#include "liarq/liar_protocol.hpp"

#include <algorithm>

#include "liarq/errors.hpp"

namespace liarq {

std::optional<std::uint32_t> first_correlation_violation(const PartyLists& lists) {
  if (lists.b.size() != lists.a.size() || lists.c.size() != lists.a.size()) return 1;
  for (std::size_t i = 0; i < lists.a.size(); ++i) {
    const Pair p = lists.a[i];
    if (p == Pair::Mixed) continue;
    const Bit complement = p == Pair::Zeros ? 1 : 0;
    if (lists.b[i] != complement || lists.c[i] != complement) return static_cast<std::uint32_t>(i + 1);
  }
  return std::nullopt;
}

PartyLists generate_lists(Session& session, std::span<const PoolEntry> pool, DirectionPolicy policy, Rng& rng) {
  if (pool.empty()) throw DomainError("cannot generate lists from an empty pool");
  auto& reg = session.registry;
  auto& net = session.network;
  PartyLists lists;
  lists.a.reserve(pool.size());
  lists.b.reserve(pool.size());
  lists.c.reserve(pool.size());
  for (const PoolEntry& entry : pool) {
    const std::uint32_t j = entry.system_id;
    const MeasurementDirection direction = choose_direction(policy, rng);
    net.send(PartyId::C, PartyId::A, DirectionAnnouncement{j, direction});
    net.send(PartyId::C, PartyId::B, DirectionAnnouncement{j, direction});

    const auto for_a = net.receive(PartyId::A, PartyId::C);
    const auto& axis_a = std::get<DirectionAnnouncement>(for_a->payload).direction;
    const auto a_handles = reg.handles(PartyId::A, j);
    if (a_handles.size() != 2) throw ProtocolViolation("A does not hold two qubits of a pool system");
    std::array<Bit, 2> a_bits{};
    reg.measure_handles(PartyId::A, a_handles, axis_a, rng, a_bits);
    lists.a.push_back(pair_from_bits(a_bits[0], a_bits[1]));

    const auto for_b = net.receive(PartyId::B, PartyId::C);
    const auto& axis_b = std::get<DirectionAnnouncement>(for_b->payload).direction;
    const auto b_handles = reg.handles(PartyId::B, j);
    if (b_handles.size() != 1) throw ProtocolViolation("B does not hold one qubit of a pool system");
    Bit b_bit = 0;
    reg.measure_handles(PartyId::B, b_handles, axis_b, rng, std::span(&b_bit, 1));
    lists.b.push_back(b_bit);

    lists.c.push_back(reg.measure_ref(PartyId::C, {j, 4}, direction, rng));
  }
  return lists;
}

PositionList extract_positions(std::span<const Pair> l_a, Bit m) {
  std::vector<std::uint32_t> out;
  const Pair target = double_of(m);
  for (std::size_t i = 0; i < l_a.size(); ++i) {
    if (l_a[i] == target) out.push_back(static_cast<std::uint32_t>(i + 1));
  }
  return PositionList(std::move(out));
}

AcceptanceThreshold AcceptanceThreshold::for_mixture(double p_first_second, double min_fraction) {
  if (!(min_fraction >= 0.0 && min_fraction <= 1.0)) throw DomainError("min_fraction must lie in [0, 1]");
  AcceptanceThreshold t;
  t.min_fraction = min_fraction;
  t.expected_fraction = escape_probabilities(p_first_second).expected_double_fraction;
  return t;
}

BDecision b_accepts(Bit m_ab, const PositionList& claimed, std::span<const Bit> l_b,
                    const AcceptanceThreshold& threshold) {
  // A true m-double at j forces l_B[j] = 1 - m.
  for (std::uint32_t j : claimed) {
    if (j > l_b.size() || l_b[j - 1] == m_ab) return {false, RejectReason::Incompatible, j};
  }
  if (static_cast<double>(claimed.size()) < threshold.minimum_length(l_b.size())) {
    return {false, RejectReason::TooShort, 0};
  }
  return {true, std::nullopt, 0};
}

std::string_view to_string(VerdictValue value) {
  switch (value) {
    case VerdictValue::Consistent: return "CONSISTENT";
    case VerdictValue::AIsLiar: return "A_IS_LIAR";
    case VerdictValue::BIsLiar: return "B_IS_LIAR";
    case VerdictValue::BRejectedAtStepIII: return "B_REJECTED_AT_STEP_III";
    case VerdictValue::Unresolved: return "UNRESOLVED";
  }
  return "?";
}

std::string_view to_string(Evidence evidence) {
  switch (evidence) {
    case Evidence::None: return "none";
    case Evidence::FullListLength: return "full_list_length";
    case Evidence::FullListInconsistent: return "full_list_inconsistent";
    case Evidence::ForwardedOutOfRange: return "forwarded_out_of_range";
    case Evidence::ForwardedInconsistent: return "forwarded_inconsistent";
    case Evidence::ForwardedTooShort: return "forwarded_too_short";
    case Evidence::ForwardedContradictsLc: return "forwarded_contradicts_l_c";
    case Evidence::RejectedIncompatible: return "rejected_incompatible";
    case Evidence::RejectedTooShort: return "rejected_too_short";
  }
  return "?";
}

std::optional<std::uint32_t> first_inconsistency(std::span<const Pair> l_ac, std::span<const Bit> l_c) {
  const std::size_t n = std::min(l_ac.size(), l_c.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (l_ac[i] == Pair::Mixed) continue;
    const Bit b = l_ac[i] == Pair::Ones ? 1 : 0;
    if (l_c[i] == b) return static_cast<std::uint32_t>(i + 1);
  }
  return std::nullopt;
}

Verdict c_adjudicate(Bit m_ac, std::span<const Pair> l_ac, Bit m_bc, const PositionList& forwarded,
                     std::span<const Bit> l_c, const AcceptanceThreshold& threshold) {
  if (m_ac == m_bc) return {};

  if (l_ac.size() != l_c.size()) return {VerdictValue::AIsLiar, Evidence::FullListLength, 0, 1};
  if (auto j = first_inconsistency(l_ac, l_c)) return {VerdictValue::AIsLiar, Evidence::FullListInconsistent, *j, 1};

  const Pair claimed = double_of(m_bc);
  for (std::uint32_t j : forwarded) {
    if (j > l_ac.size()) return {VerdictValue::BIsLiar, Evidence::ForwardedOutOfRange, j, 2};
    if (l_ac[j - 1] != claimed) return {VerdictValue::BIsLiar, Evidence::ForwardedInconsistent, j, 2};
  }
  if (static_cast<double>(forwarded.size()) < threshold.minimum_length(l_c.size())) {
    return {VerdictValue::BIsLiar, Evidence::ForwardedTooShort, 0, 2};
  }
  if (threshold.cross_check_forwarded) {
    for (std::uint32_t j : forwarded) {
      if (l_c[j - 1] == m_bc) return {VerdictValue::BIsLiar, Evidence::ForwardedContradictsLc, j, 2};
    }
  }
  return {VerdictValue::Unresolved, Evidence::None, 0, 0};
}

}  // namespace liarq
