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

// Classical payloads exchanged between the three parties.

#ifndef LIARQ_MESSAGES_HPP
#define LIARQ_MESSAGES_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "liarq/qstate.hpp"
#include "liarq/types.hpp"

namespace liarq {

// Strictly increasing list of 1-based positions. Range against a list length
// is checked by whoever consumes it.
class PositionList {
 public:
  PositionList() = default;
  PositionList(std::initializer_list<std::uint32_t> positions);
  explicit PositionList(std::vector<std::uint32_t> positions);

  // Sorts and deduplicates arbitrary input.
  static PositionList from_unsorted(std::vector<std::uint32_t> positions);

  std::size_t size() const { return positions_.size(); }
  bool empty() const { return positions_.empty(); }
  auto begin() const { return positions_.begin(); }
  auto end() const { return positions_.end(); }
  std::span<const std::uint32_t> values() const { return positions_; }
  bool contains(std::uint32_t position) const;

  friend bool operator==(const PositionList&, const PositionList&) = default;

 private:
  std::vector<std::uint32_t> positions_;
};

// C tells the measuring party which axis to use for system j.
struct DirectionAnnouncement {
  std::uint32_t system_id = 0;
  MeasurementDirection direction;

  friend bool operator==(const DirectionAnnouncement&, const DirectionAnnouncement&) = default;
};

// Test subsets, revealed only after distribution has finished.
struct SubsetAnnouncement {
  std::vector<std::uint32_t> s1;
  std::vector<std::uint32_t> s2;

  friend bool operator==(const SubsetAnnouncement&, const SubsetAnnouncement&) = default;
};

// Outcomes of a tested system reported back to C (three bits).
struct OutcomeReport {
  std::uint32_t system_id = 0;
  std::vector<Bit> bits;

  friend bool operator==(const OutcomeReport&, const OutcomeReport&) = default;
};

// A party tells C how many qubits of system j arrived.
struct ReceiptReport {
  std::uint32_t system_id = 0;
  std::uint32_t received = 0;

  friend bool operator==(const ReceiptReport&, const ReceiptReport&) = default;
};

// m plus the positions where m appears twice in l_A (A->B, and B->C).
struct MessageWithList {
  Bit message = 0;
  PositionList positions;

  friend bool operator==(const MessageWithList&, const MessageWithList&) = default;
};

// m plus the claimed full pair list l_AC (A->C).
struct FullList {
  Bit message = 0;
  std::vector<Pair> pairs;

  friend bool operator==(const FullList&, const FullList&) = default;
};

enum class RejectReason : std::uint8_t { Incompatible, TooShort };

// B refuses A's message and hands C what he received as evidence.
struct Reject {
  Bit received_message = 0;
  PositionList evidence;
  RejectReason reason = RejectReason::Incompatible;

  friend bool operator==(const Reject&, const Reject&) = default;
};

using ProtocolMessage =
    std::variant<DirectionAnnouncement, SubsetAnnouncement, OutcomeReport, ReceiptReport, MessageWithList, FullList,
                 Reject>;

std::string_view message_kind(const ProtocolMessage& message);
std::string_view to_string(RejectReason reason);

}  // namespace liarq

#endif  // LIARQ_MESSAGES_HPP
