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

#include "liarq/channels.hpp"

#include <algorithm>

#include "liarq/errors.hpp"

namespace liarq {

DeliveryReceipt ClassicalNetwork::send(PartyId sender, PartyId receiver, ProtocolMessage payload) {
  if (sender == receiver) throw DomainError("self-addressed envelope from " + std::string(to_string(sender)));
  const std::uint64_t sequence = next_sequence_++;
  ClassicalEnvelope env{sender, receiver, std::move(payload), sequence};
  if (recording_) transcript_.push_back(env);
  lanes_[lane(sender, receiver)].push_back(std::move(env));
  return {sequence};
}

std::optional<ClassicalEnvelope> ClassicalNetwork::receive(PartyId receiver, PartyId sender) {
  auto& q = lanes_[lane(sender, receiver)];
  if (q.empty()) return std::nullopt;
  ClassicalEnvelope env = std::move(q.front());
  q.pop_front();
  return env;
}

std::size_t ClassicalNetwork::pending(PartyId receiver, PartyId sender) const {
  return lanes_[lane(sender, receiver)].size();
}

void FaultModel::validate() const {
  if (!(qubit_loss_probability >= 0.0 && qubit_loss_probability <= 1.0)) {
    throw DomainError("qubit_loss_prob must lie in [0, 1]");
  }
  if (!source_state.empty() && source_state != "singlet") {
    if (source_state.size() != 4) throw DomainError("source_state must be 'singlet' or a 4-bit string");
    (void)StateVector::from_bitstring(source_state);
  }
}

StateVector FaultModel::prepare_source() const {
  if (source_state.empty() || source_state == "singlet") return make_singlet(4);
  return StateVector::from_bitstring(source_state);
}

Custody custody_of(PartyId party) {
  switch (party) {
    case PartyId::A: return Custody::A;
    case PartyId::B: return Custody::B;
    case PartyId::C: return Custody::C;
  }
  return Custody::Lost;
}

std::uint32_t QubitRegistry::prepare(StateVector state) {
  if (state.num_qubits() != 4) throw DomainError("registry holds four-qubit systems only");
  systems_.push_back(System{std::move(state), {Custody::C, Custody::C, Custody::C, Custody::C}, 0, {}});
  return static_cast<std::uint32_t>(systems_.size());
}

QubitRegistry::System& QubitRegistry::system(std::uint32_t system_id) {
  if (system_id == 0 || system_id > systems_.size()) throw DomainError("unknown system " + std::to_string(system_id));
  return systems_[system_id - 1];
}

const QubitRegistry::System& QubitRegistry::system(std::uint32_t system_id) const {
  if (system_id == 0 || system_id > systems_.size()) throw DomainError("unknown system " + std::to_string(system_id));
  return systems_[system_id - 1];
}

Custody QubitRegistry::custody(QubitRef ref) const {
  if (ref.slot < 1 || ref.slot > 4) throw DomainError("slot must be 1..4");
  return system(ref.system_id).custody[static_cast<std::size_t>(ref.slot - 1)];
}

std::uint32_t QubitRegistry::measurement_count(std::uint32_t system_id) const { return system(system_id).measurements; }

const StateVector& QubitRegistry::state(std::uint32_t system_id) const { return system(system_id).state; }

TransferOutcome QubitRegistry::move_one(PartyId from, PartyId to, QubitRef ref, const FaultModel& fault, Rng& rng,
                                        std::vector<QubitRef>& delivered) {
  System& s = system(ref.system_id);
  auto& owner = s.custody[static_cast<std::size_t>(ref.slot - 1)];
  if (owner != custody_of(from)) {
    throw ProtocolViolation(std::string(to_string(from)) + " does not hold qubit " + std::to_string(ref.system_id) +
                            "." + std::to_string(ref.slot));
  }
  if (fault.qubit_loss_probability > 0.0 && bernoulli(rng, fault.qubit_loss_probability)) {
    const int target = ref.slot;
    Bit discarded = 0;
    measure_in_place(s.state, std::span(&target, 1), MeasurementDirection::computational(), rng,
                     std::span(&discarded, 1));
    ++s.measurements;
    owner = Custody::Lost;
    return TransferOutcome::Lost;
  }
  owner = custody_of(to);
  delivered.push_back(ref);
  return TransferOutcome::Delivered;
}

void QubitRegistry::deliver(PartyId to, std::span<const QubitRef> refs, Rng& rng) {
  if (to == PartyId::C || refs.empty()) return;
  std::vector<QubitRef> order(refs.begin(), refs.end());
  std::shuffle(order.begin(), order.end(), rng);
  for (const QubitRef& ref : order) {
    const std::uint64_t value = handle_table_.size();
    handle_table_.push_back({ref, to, true});
    system(ref.system_id).issued.push_back(value);
  }
}

std::vector<TransferOutcome> QubitRegistry::transfer_qubits(PartyId from, PartyId to, std::span<const QubitRef> refs,
                                                            const FaultModel& fault, Rng& rng) {
  if (from == to) throw DomainError("transfer to self");
  std::vector<TransferOutcome> outcomes;
  std::vector<QubitRef> delivered;
  outcomes.reserve(refs.size());
  for (const QubitRef& ref : refs) {
    if (ref.slot < 1 || ref.slot > 4) throw DomainError("slot must be 1..4");
    if (from != PartyId::C) {
      // A and B cannot name slots; retire any handle they held for it.
      bool found = false;
      for (std::uint64_t v : system(ref.system_id).issued) {
        auto& h = handle_table_[v];
        if (h.live && h.ref == ref && h.holder == from) {
          h.live = false;
          found = true;
        }
      }
      if (!found) throw ProtocolViolation(std::string(to_string(from)) + " holds no handle for that qubit");
    }
    outcomes.push_back(move_one(from, to, ref, fault, rng, delivered));
  }
  deliver(to, delivered, rng);
  return outcomes;
}

QubitRef QubitRegistry::resolve(PartyId party, QubitHandle handle) const {
  if (handle.value >= handle_table_.size()) throw ProtocolViolation("unknown qubit handle");
  const HandleEntry& h = handle_table_[handle.value];
  if (!h.live || h.holder != party) {
    throw ProtocolViolation(std::string(to_string(party)) + " does not hold handle " + std::to_string(handle.value));
  }
  return h.ref;
}

std::vector<TransferOutcome> QubitRegistry::transfer_handles(PartyId from, PartyId to,
                                                             std::span<const QubitHandle> handles, const FaultModel& fault,
                                                             Rng& rng) {
  if (from == to) throw DomainError("transfer to self");
  std::vector<QubitRef> refs;
  refs.reserve(handles.size());
  for (QubitHandle h : handles) refs.push_back(resolve(from, h));
  for (QubitHandle h : handles) handle_table_[h.value].live = false;
  std::vector<TransferOutcome> outcomes;
  std::vector<QubitRef> delivered;
  for (const QubitRef& ref : refs) outcomes.push_back(move_one(from, to, ref, fault, rng, delivered));
  deliver(to, delivered, rng);
  return outcomes;
}

std::vector<QubitHandle> QubitRegistry::handles(PartyId party, std::uint32_t system_id) const {
  std::vector<QubitHandle> out;
  for (std::uint64_t v : system(system_id).issued) {
    const HandleEntry& h = handle_table_[v];
    if (h.live && h.holder == party &&
        system(system_id).custody[static_cast<std::size_t>(h.ref.slot - 1)] == custody_of(party)) {
      out.push_back({v});
    }
  }
  return out;
}

void QubitRegistry::measure_handles(PartyId party, std::span<const QubitHandle> handles,
                                    const MeasurementDirection& direction, Rng& rng, std::span<Bit> bits) {
  if (handles.empty()) throw DomainError("nothing to measure");
  std::array<int, 4> slots{};
  if (handles.size() > slots.size()) throw DomainError("too many qubits for one system");
  std::uint32_t system_id = 0;
  for (std::size_t i = 0; i < handles.size(); ++i) {
    const QubitRef ref = resolve(party, handles[i]);
    if (i > 0 && ref.system_id != system_id) throw DomainError("joint measurement must target a single system");
    system_id = ref.system_id;
    slots[i] = ref.slot;
  }
  System& s = system(system_id);
  measure_in_place(s.state, std::span<const int>(slots.data(), handles.size()), direction, rng, bits);
  ++s.measurements;
}

Bit QubitRegistry::measure_ref(PartyId party, QubitRef ref, const MeasurementDirection& direction, Rng& rng) {
  if (custody(ref) != custody_of(party)) {
    throw ProtocolViolation(std::string(to_string(party)) + " does not hold qubit " + std::to_string(ref.system_id) +
                            "." + std::to_string(ref.slot));
  }
  System& s = system(ref.system_id);
  Bit bit = 0;
  const int slot = ref.slot;
  measure_in_place(s.state, std::span(&slot, 1), direction, rng, std::span(&bit, 1));
  ++s.measurements;
  return bit;
}

void QubitRegistry::discard(std::uint32_t system_id) {
  System& s = system(system_id);
  for (auto& c : s.custody) {
    if (c != Custody::Lost) c = Custody::Discarded;
  }
  for (std::uint64_t v : s.issued) handle_table_[v].live = false;
}

}  // namespace liarq
