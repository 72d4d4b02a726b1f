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

#include "liarq/messages.hpp"

#include <algorithm>

#include "liarq/errors.hpp"

namespace liarq {

PositionList::PositionList(std::initializer_list<std::uint32_t> positions)
    : PositionList(std::vector<std::uint32_t>(positions)) {}

PositionList::PositionList(std::vector<std::uint32_t> positions) : positions_(std::move(positions)) {
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] == 0) throw DomainError("positions are 1-based");
    if (i > 0 && positions_[i] <= positions_[i - 1]) throw DomainError("positions must be strictly increasing");
  }
}

PositionList PositionList::from_unsorted(std::vector<std::uint32_t> positions) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  return PositionList(std::move(positions));
}

bool PositionList::contains(std::uint32_t position) const {
  return std::binary_search(positions_.begin(), positions_.end(), position);
}

std::string_view message_kind(const ProtocolMessage& message) {
  struct Kind {
    std::string_view operator()(const DirectionAnnouncement&) const { return "direction"; }
    std::string_view operator()(const SubsetAnnouncement&) const { return "subsets"; }
    std::string_view operator()(const OutcomeReport&) const { return "outcomes"; }
    std::string_view operator()(const ReceiptReport&) const { return "receipt"; }
    std::string_view operator()(const MessageWithList&) const { return "message_with_list"; }
    std::string_view operator()(const FullList&) const { return "full_list"; }
    std::string_view operator()(const Reject&) const { return "reject"; }
  };
  return std::visit(Kind{}, message);
}

std::string_view to_string(RejectReason reason) {
  return reason == RejectReason::Incompatible ? "INCOMPATIBLE" : "TOO_SHORT";
}

}  // namespace liarq
