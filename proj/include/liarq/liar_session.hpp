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

// Message flow of one liar-detection exchange over the secure channels.

#ifndef LIARQ_LIAR_SESSION_HPP
#define LIARQ_LIAR_SESSION_HPP

#include <optional>
#include <vector>

#include "liarq/adversary.hpp"
#include "liarq/channels.hpp"
#include "liarq/liar_protocol.hpp"

namespace liarq {

struct ProtocolRun {
  Verdict verdict;
  Bit m_ab = 0;
  Bit m_ac = 0;
  Bit m_bc = 0;
  // Message C accepts; set only for a consistent run.
  std::optional<Bit> accepted;
  BDecision b_decision;
  AAction a_action;
  BAction b_action;
  std::vector<ClassicalEnvelope> transcript;
};

// A -> B (m_AB + positions), B's acceptance test, B -> C (m_BC + forwarded
// list, or a rejection with evidence), A -> C (m_AC + l_AC), then C compares
// and adjudicates if the messages conflict.
ProtocolRun run_liar_protocol(const PartyLists& lists, const StrategyA& strategy_a, const StrategyB& strategy_b,
                              const AcceptanceThreshold& threshold, Bit message, Rng& rng,
                              bool record_transcript = true);

}  // namespace liarq

#endif  // LIARQ_LIAR_SESSION_HPP
