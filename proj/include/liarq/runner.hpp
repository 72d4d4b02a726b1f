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

// Monte-Carlo trial runner: configuration, per-trial records, aggregate
// statistics and the newline-delimited JSON result format.
//
// Result file layout: one {"type":"trial",...} object per line in trial order,
// followed by a single {"type":"summary",...} line. The summary is computed
// from the trial records alone, so it can be re-derived from the file.

#ifndef LIARQ_RUNNER_HPP
#define LIARQ_RUNNER_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "liarq/adversary.hpp"
#include "liarq/distribute_test.hpp"
#include "liarq/liar_protocol.hpp"

namespace liarq {

struct TrialConfig {
  std::uint64_t seed = 1;
  std::uint64_t trials = 1;
  DistributionPlan plan = DistributionPlan::for_pool(256);
  StrategyA strategy_a = HonestA{};
  StrategyB strategy_b = HonestB{};
  FaultModel fault;
  AcceptanceThreshold threshold;
  DirectionPolicy list_direction_policy = DirectionPolicy::Fixed;
  unsigned threads = 1;

  void validate() const;
  nlohmann::ordered_json to_json() const;
};

// Collects key=value settings from a config file and flags, later ones
// overriding earlier ones, and resolves them into a TrialConfig.
//
// Keys: seed trials M N1 N2 L strategy_a strategy_b qubit_loss_prob
// source_state min_fraction direction_policy list_direction_policy
// assignment_mixture cross_check threads
class ConfigBuilder {
 public:
  void set(std::string_view key, std::string_view value);
  // Lines of key=value; blank lines and lines starting with '#' are skipped.
  void load_file(const std::filesystem::path& path);
  TrialConfig build() const;

 private:
  std::map<std::string, std::string, std::less<>> values_;
};

inline constexpr std::array<std::string_view, 6> kOutcomeLabels = {
    "CONSISTENT", "A_IS_LIAR", "B_IS_LIAR", "B_REJECTED_AT_STEP_III", "UNRESOLVED", "ABORTED"};

struct TrialRecord {
  std::uint64_t trial = 0;
  std::string outcome = "ABORTED";  // one of kOutcomeLabels
  // distribute-and-test
  bool distributed = false;
  std::string failure_step;
  std::uint32_t failure_system = 0;
  std::uint32_t tested_rounds = 0;
  std::uint32_t failed_rounds = 0;
  // liar detection, meaningful when distributed
  std::string evidence;
  std::uint32_t evidence_position = 0;
  int stage = 0;
  int m_ab = -1;
  int m_ac = -1;
  int m_bc = -1;
  int accepted = -1;
  std::uint32_t list_length = 0;
  std::uint32_t true_doubles = 0;  // |m_AB doubles in l_A|
  std::uint32_t list_to_b = 0;
  std::uint32_t forwarded = 0;
  std::uint32_t fabricated = 0;          // fake entries in A's list to B
  std::uint32_t fabricated_escaped = 0;  // ... with l_B = 1 - m_AB
  std::uint32_t forged = 0;              // positions B invented
  std::uint32_t forged_escaped = 0;      // ... that are true m_BC doubles
  std::uint32_t altered_doubles = 0;     // l_AC entries rewritten as a double
  std::uint32_t altered_escaped = 0;     // ... consistent with l_C
  bool capped = false;
  bool correlation_ok = true;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

nlohmann::ordered_json to_json(const TrialRecord& record);
TrialRecord record_from_json(const nlohmann::json& j);

struct RateEstimate {
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  double rate = 0.0;
  double wilson_low = 0.0;   // 95%
  double wilson_high = 1.0;
};

RateEstimate estimate_rate(std::uint64_t hits, std::uint64_t total);

struct TrialStats {
  std::uint64_t trials = 0;
  std::array<std::uint64_t, kOutcomeLabels.size()> counts{};
  RateEstimate detection;  // outcomes other than CONSISTENT
  RateEstimate escape_vs_b;
  RateEstimate escape_vs_full_list;
  RateEstimate escape_vs_l_c;
  RateEstimate round_failure;  // tested distribute rounds that failed
  double mean_list_to_b = 0.0;
  double mean_forwarded = 0.0;
  double mean_true_doubles = 0.0;

  std::uint64_t count(std::string_view outcome) const;
};

TrialStats summarize(std::span<const TrialRecord> records);
nlohmann::ordered_json to_json(const TrialStats& stats);

struct RunResult {
  TrialConfig config;
  std::vector<TrialRecord> records;
  TrialStats stats;
  double wall_seconds = 0.0;  // not part of the result file
  double wall_seconds_per_trial() const;
};

// Trial i draws from derive_stream(seed, i) only.
TrialRecord run_trial(const TrialConfig& config, std::uint64_t index);
RunResult run(const TrialConfig& config);

void write_results(const RunResult& result, std::ostream& out);
// Throws IoError.
void write_results_file(const RunResult& result, const std::filesystem::path& path);

}  // namespace liarq

#endif  // LIARQ_RUNNER_HPP
