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

// Simulated communication substrate: secure pairwise classical channels and a
// custody registry for the qubits of every prepared four-qubit system.

#ifndef LIARQ_CHANNELS_HPP
#define LIARQ_CHANNELS_HPP

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liarq/messages.hpp"
#include "liarq/qstate.hpp"
#include "liarq/random.hpp"
#include "liarq/types.hpp"

namespace liarq {

struct ClassicalEnvelope {
  PartyId sender = PartyId::A;
  PartyId receiver = PartyId::B;
  ProtocolMessage payload;
  std::uint64_t sequence = 0;
};

struct DeliveryReceipt {
  std::uint64_t sequence = 0;
};

// Secure channels: every envelope reaches only its addressee, once, unmodified
// and in send order. The network also keeps the append-only transcript of
// everything sent, which is the audit log of a trial.
class ClassicalNetwork {
 public:
  // Throws DomainError for a self-addressed envelope. The sequence number is
  // assigned here.
  DeliveryReceipt send(PartyId sender, PartyId receiver, ProtocolMessage payload);

  std::optional<ClassicalEnvelope> receive(PartyId receiver, PartyId sender);
  std::size_t pending(PartyId receiver, PartyId sender) const;

  const std::vector<ClassicalEnvelope>& transcript() const { return transcript_; }
  void set_recording(bool on) { recording_ = on; }

 private:
  static std::size_t lane(PartyId sender, PartyId receiver) {
    return static_cast<std::size_t>(sender) * 3 + static_cast<std::size_t>(receiver);
  }

  std::array<std::deque<ClassicalEnvelope>, 9> lanes_;
  std::vector<ClassicalEnvelope> transcript_;
  std::uint64_t next_sequence_ = 0;
  bool recording_ = true;
};

struct QubitRef {
  std::uint32_t system_id = 0;  // 1-based
  int slot = 1;                 // 1..4, i.e. j1..j4

  friend bool operator==(const QubitRef&, const QubitRef&) = default;
};

// Opaque qubit name given to A or B. It does not reveal the slot.
struct QubitHandle {
  std::uint64_t value = 0;

  friend bool operator==(const QubitHandle&, const QubitHandle&) = default;
};

struct FaultModel {
  double qubit_loss_probability = 0.0;
  // Replacement for the singlet at preparation: a four-character bitstring
  // naming a product state, e.g. "0000". Empty means an honest source.
  std::string source_state;

  void validate() const;
  StateVector prepare_source() const;
};

enum class TransferOutcome : std::uint8_t { Delivered, Lost };

enum class Custody : std::uint8_t { A, B, C, Lost, Discarded };

// Who holds every (system, slot). Only C's side of the simulation may address
// qubits by QubitRef; A and B act through handles.
class QubitRegistry {
 public:
  // New system with all four slots held by C. Ids are 1, 2, ...
  std::uint32_t prepare(StateVector state);

  std::size_t system_count() const { return systems_.size(); }
  Custody custody(QubitRef ref) const;
  // Number of measurements (including loss trace-outs) applied to a system.
  std::uint32_t measurement_count(std::uint32_t system_id) const;
  const StateVector& state(std::uint32_t system_id) const;

  // Moves custody of C-addressed refs. Each qubit is lost independently with
  // fault.qubit_loss_probability; a lost qubit is traced out. Throws
  // ProtocolViolation if from does not hold a ref.
  std::vector<TransferOutcome> transfer_qubits(PartyId from, PartyId to, std::span<const QubitRef> refs,
                                               const FaultModel& fault, Rng& rng);
  // Same for handle-addressed qubits held by A or B. The receiver gets fresh
  // handles in random order.
  std::vector<TransferOutcome> transfer_handles(PartyId from, PartyId to, std::span<const QubitHandle> handles,
                                                const FaultModel& fault, Rng& rng);

  // Handles currently held by party for system_id, in issue order.
  std::vector<QubitHandle> handles(PartyId party, std::uint32_t system_id) const;

  void measure_handles(PartyId party, std::span<const QubitHandle> handles, const MeasurementDirection& direction,
                       Rng& rng, std::span<Bit> bits);
  Bit measure_ref(PartyId party, QubitRef ref, const MeasurementDirection& direction, Rng& rng);

  // Marks every live slot of a system as discarded.
  void discard(std::uint32_t system_id);

 private:
  struct System {
    StateVector state;
    std::array<Custody, 4> custody{Custody::C, Custody::C, Custody::C, Custody::C};
    std::uint32_t measurements = 0;
    std::vector<std::uint64_t> issued;  // handle values, issue order
  };

  struct HandleEntry {
    QubitRef ref;
    PartyId holder;
    bool live;
  };

  System& system(std::uint32_t system_id);
  const System& system(std::uint32_t system_id) const;
  QubitRef resolve(PartyId party, QubitHandle handle) const;
  void deliver(PartyId to, std::span<const QubitRef> refs, Rng& rng);
  TransferOutcome move_one(PartyId from, PartyId to, QubitRef ref, const FaultModel& fault, Rng& rng,
                           std::vector<QubitRef>& delivered);

  std::vector<System> systems_;
  std::vector<HandleEntry> handle_table_;  // indexed by handle value
};

Custody custody_of(PartyId party);

// One simulation instance: the qubit registry plus the classical network
// shared by the three parties.
struct Session {
  QubitRegistry registry;
  ClassicalNetwork network;
};

}  // namespace liarq

#endif  // LIARQ_CHANNELS_HPP
