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

#include "liarq/liar_session.hpp"

#include "liarq/errors.hpp"

namespace liarq {

namespace {

template <typename T>
const T* as(const std::optional<ClassicalEnvelope>& env) {
  return env ? std::get_if<T>(&env->payload) : nullptr;
}

}  // namespace

ProtocolRun run_liar_protocol(const PartyLists& lists, const StrategyA& strategy_a, const StrategyB& strategy_b,
                              const AcceptanceThreshold& threshold, Bit message, Rng& rng, bool record_transcript) {
  if (lists.b.size() != lists.size() || lists.c.size() != lists.size() || lists.size() == 0) {
    throw DomainError("party lists must be non-empty and of equal length");
  }
  ClassicalNetwork net;
  net.set_recording(record_transcript);
  ProtocolRun run;

  // A sees only l_A.
  run.a_action = strategy_a_act(strategy_a, message, lists.a, rng);
  run.m_ab = run.a_action.m_ab;
  run.m_ac = run.a_action.m_ac;
  net.send(PartyId::A, PartyId::B, MessageWithList{run.a_action.m_ab, run.a_action.to_b});

  // B sees only l_B and A's message.
  const auto from_a = net.receive(PartyId::B, PartyId::A);
  const auto* offer = as<MessageWithList>(from_a);
  if (!offer) throw ProtocolViolation("B expected A's message");
  if (is_honest(strategy_b)) {
    run.b_decision = b_accepts(offer->message, offer->positions, lists.b, threshold);
    if (!run.b_decision.accepted) {
      net.send(PartyId::B, PartyId::C, Reject{offer->message, offer->positions, *run.b_decision.reason});
    }
  } else {
    run.b_decision.accepted = true;
  }
  if (run.b_decision.accepted) {
    run.b_action = strategy_b_act(strategy_b, offer->message, offer->positions, lists.b, threshold, rng);
    net.send(PartyId::B, PartyId::C, MessageWithList{run.b_action.m_bc, run.b_action.forwarded});
  }

  net.send(PartyId::A, PartyId::C, FullList{run.a_action.m_ac, run.a_action.l_ac});

  // C sees only l_C and what arrives.
  const auto from_b = net.receive(PartyId::C, PartyId::B);
  const auto from_a_to_c = net.receive(PartyId::C, PartyId::A);
  const auto* full = as<FullList>(from_a_to_c);
  if (!full) throw ProtocolViolation("C expected A's full list");

  if (const auto* reject = as<Reject>(from_b)) {
    run.m_bc = reject->received_message;
    run.verdict = {VerdictValue::BRejectedAtStepIII,
                   reject->reason == RejectReason::Incompatible ? Evidence::RejectedIncompatible
                                                                : Evidence::RejectedTooShort,
                   run.b_decision.position, 0};
  } else if (const auto* relayed = as<MessageWithList>(from_b)) {
    run.m_bc = relayed->message;
    run.verdict = c_adjudicate(full->message, full->pairs, relayed->message, relayed->positions, lists.c, threshold);
    if (run.verdict.value == VerdictValue::Consistent) run.accepted = full->message;
  } else {
    throw ProtocolViolation("C expected B's message");
  }
  run.transcript = net.transcript();
  return run;
}

}  // namespace liarq
