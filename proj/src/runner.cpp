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

#include "liarq/runner.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "liarq/errors.hpp"
#include "liarq/liar_session.hpp"

namespace liarq {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("invalid value '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "1" || text == "true" || text == "on" || text == "yes") return true;
  if (text == "0" || text == "false" || text == "off" || text == "no") return false;
  throw ConfigError("invalid boolean '" + std::string(text) + "' for " + std::string(key));
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

constexpr std::array<std::string_view, 16> kKeys = {
    "seed", "trials", "M", "N1", "N2", "L", "strategy_a", "strategy_b", "qubit_loss_prob", "source_state",
    "min_fraction", "direction_policy", "list_direction_policy", "assignment_mixture", "cross_check", "threads"};

std::size_t outcome_index(std::string_view label) {
  const auto it = std::find(kOutcomeLabels.begin(), kOutcomeLabels.end(), label);
  if (it == kOutcomeLabels.end()) throw DomainError("unknown outcome label '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - kOutcomeLabels.begin());
}

ordered_json rate_json(const RateEstimate& r) {
  return ordered_json{{"hits", r.hits}, {"total", r.total}, {"rate", r.rate}, {"wilson95", {r.wilson_low, r.wilson_high}}};
}

std::uint32_t ceil_div(std::uint32_t a, std::uint32_t b) { return (a + b - 1) / b; }

}  // namespace

void TrialConfig::validate() const {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (threads < 1) throw ConfigError("threads must be >= 1");
  try {
    plan.validate();
    fault.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (!(threshold.min_fraction >= 0.0 && threshold.min_fraction <= 1.0)) {
    throw ConfigError("min_fraction must lie in [0, 1]");
  }
}

ordered_json TrialConfig::to_json() const {
  return ordered_json{{"seed", seed},
                      {"trials", trials},
                      {"M", plan.total},
                      {"N1", plan.first_test},
                      {"N2", plan.second_test},
                      {"L", plan.pool},
                      {"strategy_a", liarq::to_string(strategy_a)},
                      {"strategy_b", liarq::to_string(strategy_b)},
                      {"qubit_loss_prob", fault.qubit_loss_probability},
                      {"source_state", fault.source_state.empty() ? "singlet" : fault.source_state},
                      {"min_fraction", threshold.min_fraction},
                      {"expected_fraction", threshold.expected_fraction},
                      {"direction_policy", liarq::to_string(plan.direction_policy)},
                      {"list_direction_policy", liarq::to_string(list_direction_policy)},
                      {"assignment_mixture", plan.assignment_mixture},
                      {"cross_check", threshold.cross_check_forwarded}};
}

void ConfigBuilder::set(std::string_view key, std::string_view value) {
  if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
    throw ConfigError("unknown configuration key '" + std::string(key) + "'");
  }
  values_.insert_or_assign(std::string(key), std::string(trim(value)));
}

void ConfigBuilder::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(number) + ": expected key=value");
    }
    set(trim(text.substr(0, eq)), text.substr(eq + 1));
  }
}

TrialConfig ConfigBuilder::build() const {
  auto get = [&](std::string_view key) -> const std::string* {
    const auto it = values_.find(key);
    return it == values_.end() ? nullptr : &it->second;
  };
  auto get_u32 = [&](std::string_view key) -> std::optional<std::uint32_t> {
    if (const auto* v = get(key)) return parse_number<std::uint32_t>(key, *v);
    return std::nullopt;
  };

  TrialConfig config;
  if (const auto* v = get("seed")) config.seed = parse_number<std::uint64_t>("seed", *v);
  if (const auto* v = get("trials")) config.trials = parse_number<std::uint64_t>("trials", *v);
  if (const auto* v = get("threads")) config.threads = parse_number<unsigned>("threads", *v);
  if (const auto* v = get("strategy_a")) config.strategy_a = parse_strategy_a(*v);
  if (const auto* v = get("strategy_b")) config.strategy_b = parse_strategy_b(*v);
  if (const auto* v = get("qubit_loss_prob")) config.fault.qubit_loss_probability = parse_number<double>("qubit_loss_prob", *v);
  if (const auto* v = get("source_state")) config.fault.source_state = *v == "singlet" ? std::string() : *v;
  if (const auto* v = get("list_direction_policy")) config.list_direction_policy = parse_direction_policy(*v);

  // Plan sizes: fill whatever was not given so that M = N1 + N2 + L.
  auto m = get_u32("M"), n1 = get_u32("N1"), n2 = get_u32("N2"), l = get_u32("L");
  if (!n1 && n2) n1 = n2;
  if (!n2 && n1) n2 = n1;
  if (!n1) {
    if (m && l) {
      if (*m < *l) throw ConfigError("M must exceed L");
      n1 = ceil_div(*m - *l, 2);
      n2 = *m - *l - *n1;
    } else if (m) {
      n1 = n2 = ceil_div(*m, 4);
    } else {
      if (!l) l = 256;
      n1 = n2 = std::max<std::uint32_t>(1, ceil_div(*l, 2));
    }
  }
  if (!l && !m) l = 256;
  if (!l) l = *m >= *n1 + *n2 ? *m - *n1 - *n2 : 0;
  if (!m) m = *n1 + *n2 + *l;
  config.plan.total = *m;
  config.plan.first_test = *n1;
  config.plan.second_test = *n2;
  config.plan.pool = *l;
  if (const auto* v = get("direction_policy")) config.plan.direction_policy = parse_direction_policy(*v);
  if (const auto* v = get("assignment_mixture")) {
    config.plan.assignment_mixture = parse_number<double>("assignment_mixture", *v);
  }

  double min_fraction = 0.5;
  if (const auto* v = get("min_fraction")) min_fraction = parse_number<double>("min_fraction", *v);
  try {
    config.threshold = AcceptanceThreshold::for_mixture(config.plan.assignment_mixture, min_fraction);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (const auto* v = get("cross_check")) config.threshold.cross_check_forwarded = parse_bool("cross_check", *v);
  config.validate();
  return config;
}

ordered_json to_json(const TrialRecord& r) {
  return ordered_json{{"type", "trial"},
                      {"trial", r.trial},
                      {"outcome", r.outcome},
                      {"distributed", r.distributed},
                      {"failure_step", r.failure_step},
                      {"failure_system", r.failure_system},
                      {"tested_rounds", r.tested_rounds},
                      {"failed_rounds", r.failed_rounds},
                      {"evidence", r.evidence},
                      {"evidence_position", r.evidence_position},
                      {"stage", r.stage},
                      {"m_ab", r.m_ab},
                      {"m_ac", r.m_ac},
                      {"m_bc", r.m_bc},
                      {"accepted", r.accepted},
                      {"list_length", r.list_length},
                      {"true_doubles", r.true_doubles},
                      {"list_to_b", r.list_to_b},
                      {"forwarded", r.forwarded},
                      {"fabricated", r.fabricated},
                      {"fabricated_escaped", r.fabricated_escaped},
                      {"forged", r.forged},
                      {"forged_escaped", r.forged_escaped},
                      {"altered_doubles", r.altered_doubles},
                      {"altered_escaped", r.altered_escaped},
                      {"capped", r.capped},
                      {"correlation_ok", r.correlation_ok}};
}

TrialRecord record_from_json(const nlohmann::json& j) {
  TrialRecord r;
  r.trial = j.at("trial").get<std::uint64_t>();
  r.outcome = j.at("outcome").get<std::string>();
  r.distributed = j.at("distributed").get<bool>();
  r.failure_step = j.at("failure_step").get<std::string>();
  r.failure_system = j.at("failure_system").get<std::uint32_t>();
  r.tested_rounds = j.at("tested_rounds").get<std::uint32_t>();
  r.failed_rounds = j.at("failed_rounds").get<std::uint32_t>();
  r.evidence = j.at("evidence").get<std::string>();
  r.evidence_position = j.at("evidence_position").get<std::uint32_t>();
  r.stage = j.at("stage").get<int>();
  r.m_ab = j.at("m_ab").get<int>();
  r.m_ac = j.at("m_ac").get<int>();
  r.m_bc = j.at("m_bc").get<int>();
  r.accepted = j.at("accepted").get<int>();
  r.list_length = j.at("list_length").get<std::uint32_t>();
  r.true_doubles = j.at("true_doubles").get<std::uint32_t>();
  r.list_to_b = j.at("list_to_b").get<std::uint32_t>();
  r.forwarded = j.at("forwarded").get<std::uint32_t>();
  r.fabricated = j.at("fabricated").get<std::uint32_t>();
  r.fabricated_escaped = j.at("fabricated_escaped").get<std::uint32_t>();
  r.forged = j.at("forged").get<std::uint32_t>();
  r.forged_escaped = j.at("forged_escaped").get<std::uint32_t>();
  r.altered_doubles = j.at("altered_doubles").get<std::uint32_t>();
  r.altered_escaped = j.at("altered_escaped").get<std::uint32_t>();
  r.capped = j.at("capped").get<bool>();
  r.correlation_ok = j.at("correlation_ok").get<bool>();
  return r;
}

RateEstimate estimate_rate(std::uint64_t hits, std::uint64_t total) {
  RateEstimate r{hits, total};
  if (total == 0) return r;
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(total);
  const double p = static_cast<double>(hits) / n;
  const double denom = 1.0 + z * z / n;
  const double centre = (p + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
  r.rate = p;
  // The bounds are exact at the extremes; rounding would leave ~1e-18 there.
  r.wilson_low = hits == 0 ? 0.0 : std::max(0.0, centre - half);
  r.wilson_high = hits == total ? 1.0 : std::min(1.0, centre + half);
  return r;
}

std::uint64_t TrialStats::count(std::string_view outcome) const { return counts[outcome_index(outcome)]; }

TrialStats summarize(std::span<const TrialRecord> records) {
  TrialStats s;
  s.trials = records.size();
  std::uint64_t fab = 0, fab_esc = 0, forged = 0, forged_esc = 0, alt = 0, alt_esc = 0, rounds = 0, failed = 0;
  std::uint64_t to_b = 0, fwd = 0, doubles = 0, liar_runs = 0;
  for (const auto& r : records) {
    ++s.counts[outcome_index(r.outcome)];
    fab += r.fabricated;
    fab_esc += r.fabricated_escaped;
    forged += r.forged;
    forged_esc += r.forged_escaped;
    alt += r.altered_doubles;
    alt_esc += r.altered_escaped;
    rounds += r.tested_rounds;
    failed += r.failed_rounds;
    if (r.distributed) {
      ++liar_runs;
      to_b += r.list_to_b;
      fwd += r.forwarded;
      doubles += r.true_doubles;
    }
  }
  s.detection = estimate_rate(s.trials - s.counts[0], s.trials);
  s.escape_vs_b = estimate_rate(fab_esc, fab);
  s.escape_vs_full_list = estimate_rate(forged_esc, forged);
  s.escape_vs_l_c = estimate_rate(alt_esc, alt);
  s.round_failure = estimate_rate(failed, rounds);
  if (liar_runs > 0) {
    const double n = static_cast<double>(liar_runs);
    s.mean_list_to_b = static_cast<double>(to_b) / n;
    s.mean_forwarded = static_cast<double>(fwd) / n;
    s.mean_true_doubles = static_cast<double>(doubles) / n;
  }
  return s;
}

ordered_json to_json(const TrialStats& s) {
  ordered_json counts = ordered_json::object();
  for (std::size_t i = 0; i < kOutcomeLabels.size(); ++i) counts[std::string(kOutcomeLabels[i])] = s.counts[i];
  return ordered_json{{"type", "summary"},
                      {"trials", s.trials},
                      {"counts", counts},
                      {"detection", rate_json(s.detection)},
                      {"escape_vs_b", rate_json(s.escape_vs_b)},
                      {"escape_vs_full_list", rate_json(s.escape_vs_full_list)},
                      {"escape_vs_l_c", rate_json(s.escape_vs_l_c)},
                      {"round_failure", rate_json(s.round_failure)},
                      {"mean_list_to_b", s.mean_list_to_b},
                      {"mean_forwarded", s.mean_forwarded},
                      {"mean_true_doubles", s.mean_true_doubles}};
}

TrialRecord run_trial(const TrialConfig& config, std::uint64_t index) {
  Rng rng = derive_stream(config.seed, index);
  TrialRecord rec;
  rec.trial = index;

  Session session;
  session.network.set_recording(false);
  const DistributeOutcome dist = run_distribute_and_test(session, config.plan, config.fault, rng);
  rec.tested_rounds = static_cast<std::uint32_t>(dist.tests.size());
  rec.failed_rounds = static_cast<std::uint32_t>(
      std::count_if(dist.tests.begin(), dist.tests.end(), [](const TestRecord& t) { return !t.passed; }));
  if (dist.status == DistributeStatus::Failure) {
    rec.failure_step = std::string(to_string(dist.failure->step));
    rec.failure_system = dist.failure->system_id;
    return rec;
  }
  rec.distributed = true;

  const PartyLists lists = generate_lists(session, dist.pool, config.list_direction_policy, rng);
  rec.correlation_ok = !first_correlation_violation(lists).has_value();
  const Bit message = static_cast<Bit>(rng() & 1u);
  const ProtocolRun run =
      run_liar_protocol(lists, config.strategy_a, config.strategy_b, config.threshold, message, rng, false);

  rec.outcome = std::string(to_string(run.verdict.value));
  rec.evidence = std::string(to_string(run.verdict.evidence));
  rec.evidence_position = run.verdict.position;
  rec.stage = run.verdict.stage;
  rec.m_ab = run.m_ab;
  rec.m_ac = run.m_ac;
  rec.m_bc = run.m_bc;
  rec.accepted = run.accepted ? *run.accepted : -1;
  rec.list_length = static_cast<std::uint32_t>(lists.size());
  rec.true_doubles = static_cast<std::uint32_t>(extract_positions(lists.a, run.m_ab).size());
  rec.list_to_b = static_cast<std::uint32_t>(run.a_action.to_b.size());
  rec.forwarded = static_cast<std::uint32_t>(run.b_action.forwarded.size());

  // Escape bookkeeping uses the simulator's full view of all three lists.
  rec.fabricated = static_cast<std::uint32_t>(run.a_action.fabricated.size());
  for (std::uint32_t j : run.a_action.fabricated) {
    if (lists.b[j - 1] == 1 - run.m_ab) ++rec.fabricated_escaped;
  }
  rec.forged = static_cast<std::uint32_t>(run.b_action.forged.size());
  for (std::uint32_t j : run.b_action.forged) {
    if (lists.a[j - 1] == double_of(run.b_action.m_bc)) ++rec.forged_escaped;
  }
  for (std::uint32_t j : run.a_action.altered) {
    const Pair claim = run.a_action.l_ac[j - 1];
    if (claim == Pair::Mixed) continue;
    ++rec.altered_doubles;
    if (lists.c[j - 1] != (claim == Pair::Ones ? 1 : 0)) ++rec.altered_escaped;
  }
  rec.capped = run.a_action.capped || run.b_action.capped;
  return rec;
}

double RunResult::wall_seconds_per_trial() const {
  return records.empty() ? 0.0 : wall_seconds / static_cast<double>(records.size());
}

RunResult run(const TrialConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  result.config = config;
  result.records.resize(config.trials);
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(config.threads, config.trials));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < config.trials; ++i) result.records[i] = run_trial(config, i);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::uint64_t i = w; i < config.trials; i += workers) result.records[i] = run_trial(config, i);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  result.stats = summarize(result.records);
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

void write_results(const RunResult& result, std::ostream& out) {
  for (const auto& r : result.records) out << to_json(r).dump() << '\n';
  ordered_json summary = to_json(result.stats);
  summary["config"] = result.config.to_json();
  out << summary.dump() << '\n';
}

void write_results_file(const RunResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_results(result, out);
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

}  // namespace liarq
