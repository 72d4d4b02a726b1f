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

// Party strategies. Cheaters measure honestly and then lie about classical
// data only; each strategy sees nothing but its own list and what it has been
// sent.

#ifndef LIARQ_ADVERSARY_HPP
#define LIARQ_ADVERSARY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "liarq/liar_protocol.hpp"

namespace liarq {

struct HonestA {};

// m_AB != m_AC. The list sent to B is A's true m_AB doubles padded with
// `fabrications` mixed positions; l_AC backs m_AC by rewriting every mixed
// position as an m_AC double.
struct SplitMessage {
  std::uint32_t fabrications = 0;
};

// Honest messages, but `altered` mixed entries of l_AC rewritten as random
// doubles. Used to measure the per-entry escape rate against l_C.
struct ForgedFullList {
  std::uint32_t altered = 0;
};

// m_AB != m_AC. A sends B her complete true m_AB list, then tells C those
// positions were mixed. Every double she does claim is true, so the check of
// l_AC against l_C cannot catch her, and B's faithfully forwarded list then
// contradicts l_AC.
struct FrameB {};

using StrategyA = std::variant<HonestA, SplitMessage, ForgedFullList, FrameB>;

struct HonestB {};

// m_BC = 1 - m_AB, forwarded with `fakes` positions drawn from those where
// l_B = m_AB (the only places an m_BC double could sit). Without a count, B
// forges the expected honest length.
struct FlipAndForge {
  std::optional<std::uint32_t> fakes;
};

using StrategyB = std::variant<HonestB, FlipAndForge>;

// "honest", "split:n=3", "forged:k=5", "frame"
StrategyA parse_strategy_a(std::string_view text);
// "honest", "flipforge", "flipforge:k=40"
StrategyB parse_strategy_b(std::string_view text);
std::string to_string(const StrategyA& strategy);
std::string to_string(const StrategyB& strategy);

bool is_honest(const StrategyA& strategy);
bool is_honest(const StrategyB& strategy);

struct AAction {
  Bit m_ab = 0;
  PositionList to_b;
  Bit m_ac = 0;
  std::vector<Pair> l_ac;
  std::vector<std::uint32_t> fabricated;  // entries of to_b that are not true m_AB doubles
  std::vector<std::uint32_t> altered;     // positions where l_ac differs from l_a
  std::uint32_t requested = 0;
  bool capped = false;
};

// intended is the message an honest A would send.
AAction strategy_a_act(const StrategyA& strategy, Bit intended, std::span<const Pair> l_a, Rng& rng);

struct BAction {
  Bit m_bc = 0;
  PositionList forwarded;
  std::vector<std::uint32_t> forged;
  std::uint32_t requested = 0;
  bool capped = false;
};

BAction strategy_b_act(const StrategyB& strategy, Bit m_ab, const PositionList& received, std::span<const Bit> l_b,
                       const AcceptanceThreshold& threshold, Rng& rng);

}  // namespace liarq

#endif  // LIARQ_ADVERSARY_HPP
