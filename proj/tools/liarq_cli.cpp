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

// liarq command-line harness. Talks to the simulator only through the C API.

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liarq/liarq.h"

namespace {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kIo = 3 };

int exit_code_for(liarq_status status) {
  switch (status) {
    case LIARQ_OK: return kOk;
    case LIARQ_ERR_CONFIG:
    case LIARQ_ERR_DOMAIN:
    case LIARQ_ERR_RESOURCE:
    case LIARQ_ERR_INVALID_ARGUMENT: return kUsage;
    case LIARQ_ERR_IO: return kIo;
    default: return kInternal;
  }
}

int report(liarq_status status, const char* what) {
  std::cerr << "liarq: " << what << ": " << liarq_status_string(status) << ": " << liarq_last_error() << '\n';
  return exit_code_for(status);
}

struct ConfigDeleter {
  void operator()(liarq_config* c) const { liarq_config_destroy(c); }
};
struct ResultDeleter {
  void operator()(liarq_result* r) const { liarq_result_destroy(r); }
};

std::string fetch_text(liarq_status (*call)(const liarq_result*, char*, size_t, size_t*), const liarq_result* r) {
  size_t needed = 0;
  call(r, nullptr, 0, &needed);
  std::string text(needed, '\0');
  if (call(r, text.data(), text.size(), &needed) != LIARQ_OK) return {};
  text.resize(needed - 1);
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator for quantum liar detection with four-qubit singlets"};
  app.require_subcommand(1);

  struct Flag {
    const char* name;
    const char* key;  // config key
    const char* type;
    const char* help;
  };
  const std::vector<Flag> flags = {
      {"--trials", "trials", "N", "number of trials (default 1)"},
      {"--seed", "seed", "N", "64-bit seed; trial i uses a stream derived from (seed, i)"},
      {"--L", "L", "N", "pool size left after testing (default 256)"},
      {"--M", "M", "N", "systems prepared"},
      {"--N1", "N1", "N", "systems tested with B measuring"},
      {"--N2", "N2", "N", "systems tested with A measuring"},
      {"--strategy-a", "strategy_a", "S", "honest | split:n=K | forged:k=K | frame"},
      {"--strategy-b", "strategy_b", "S", "honest | flipforge[:k=K]"},
      {"--qubit-loss-prob", "qubit_loss_prob", "P", "per-qubit loss probability in transit"},
      {"--source-state", "source_state", "S", "singlet, or a 4-bit product state such as 0011"},
      {"--min-fraction", "min_fraction", "F", "shortest acceptable list as a fraction of the expected length (0.5)"},
      {"--direction-policy", "direction_policy", "P", "axes for the sacrificial tests: random | fixed"},
      {"--list-direction-policy", "list_direction_policy", "P", "axes for list generation: fixed | random"},
      {"--assignment-mixture", "assignment_mixture", "P", "probability that A holds j1,j2 (0.5)"},
      {"--cross-check", "cross_check", "B", "also check forwarded positions against l_C"},
      {"--threads", "threads", "N", "worker threads (results do not depend on it)"},
  };

  auto* run = app.add_subcommand("run", "Run Monte-Carlo trials of distribute-and-test plus liar detection");
  std::map<std::string, std::string> values;
  for (const auto& f : flags) run->add_option(f.name, values[f.key], f.help)->type_name(f.type);
  std::string config_path;
  std::string out_path;
  bool quiet = false;
  run->add_option("--config", config_path, "key=value config file; flags take precedence")->type_name("FILE");
  run->add_option("--out", out_path, "result file (newline-delimited JSON); default stdout")->type_name("FILE");
  run->add_flag("--quiet", quiet, "do not print the summary to stderr");

  auto* oracle = app.add_subcommand("oracle", "Print exact outcome tables and escape probabilities");
  double mixture = 0.5;
  oracle->add_option("--assignment-mixture", mixture, "probability that A holds j1,j2")->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*oracle) {
    size_t needed = 0;
    liarq_oracle_dump(mixture, nullptr, 0, &needed);
    std::string text(needed, '\0');
    if (const auto st = liarq_oracle_dump(mixture, text.data(), text.size(), &needed); st != LIARQ_OK) {
      return report(st, "oracle");
    }
    std::fwrite(text.data(), 1, needed - 1, stdout);
    return kOk;
  }

  liarq_config* raw_config = nullptr;
  if (const auto st = liarq_config_create(&raw_config); st != LIARQ_OK) return report(st, "config");
  std::unique_ptr<liarq_config, ConfigDeleter> config(raw_config);
  if (!config_path.empty()) {
    if (const auto st = liarq_config_load_file(config.get(), config_path.c_str()); st != LIARQ_OK) {
      return report(st, "config file");
    }
  }
  for (const auto& f : flags) {
    if (run->count(f.name) == 0) continue;
    if (const auto st = liarq_config_set(config.get(), f.key, values[f.key].c_str()); st != LIARQ_OK) {
      return report(st, f.name);
    }
  }

  liarq_result* raw_result = nullptr;
  if (const auto st = liarq_run(config.get(), &raw_result); st != LIARQ_OK) return report(st, "run");
  std::unique_ptr<liarq_result, ResultDeleter> result(raw_result);

  const std::string target = out_path.empty() ? "/dev/stdout" : out_path;
  if (const auto st = liarq_result_write(result.get(), target.c_str()); st != LIARQ_OK) return report(st, "write");

  if (!quiet) {
    std::cerr << fetch_text(liarq_result_summary_json, result.get()) << '\n';
    std::cerr << "wall clock: " << liarq_result_wall_seconds(result.get()) << " s for "
              << liarq_result_trials(result.get()) << " trials\n";
  }
  return kOk;
}
