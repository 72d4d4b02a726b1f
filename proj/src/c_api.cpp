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

#include "liarq/liarq.h"

#include <cstring>
#include <exception>
#include <string>

#include "liarq/errors.hpp"
#include "liarq/oracle.hpp"
#include "liarq/runner.hpp"

struct liarq_config {
  liarq::ConfigBuilder builder;
};

struct liarq_result {
  liarq::RunResult result;
};

namespace {

thread_local std::string last_error;

liarq_status fail(liarq_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
liarq_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const liarq::ConfigError& e) {
    return fail(LIARQ_ERR_CONFIG, e.what());
  } catch (const liarq::DomainError& e) {
    return fail(LIARQ_ERR_DOMAIN, e.what());
  } catch (const liarq::ResourceError& e) {
    return fail(LIARQ_ERR_RESOURCE, e.what());
  } catch (const liarq::ProtocolViolation& e) {
    return fail(LIARQ_ERR_PROTOCOL, e.what());
  } catch (const liarq::IoError& e) {
    return fail(LIARQ_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(LIARQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LIARQ_ERR_INTERNAL, "unknown error");
  }
}

liarq_status copy_text(const std::string& text, char* buf, size_t cap, size_t* needed) {
  const size_t size = text.size() + 1;
  if (needed) *needed = size;
  if (cap < size) return fail(LIARQ_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(size) + " bytes");
  if (!buf) return fail(LIARQ_ERR_INVALID_ARGUMENT, "null buffer");
  std::memcpy(buf, text.c_str(), size);
  return LIARQ_OK;
}

}  // namespace

extern "C" {

const char* liarq_version(void) { return "1.0.0"; }

const char* liarq_status_string(liarq_status status) {
  switch (status) {
    case LIARQ_OK: return "ok";
    case LIARQ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LIARQ_ERR_CONFIG: return "configuration error";
    case LIARQ_ERR_DOMAIN: return "domain error";
    case LIARQ_ERR_RESOURCE: return "resource error";
    case LIARQ_ERR_PROTOCOL: return "protocol violation";
    case LIARQ_ERR_IO: return "I/O error";
    case LIARQ_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case LIARQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* liarq_last_error(void) { return last_error.c_str(); }

liarq_status liarq_config_create(liarq_config** out) {
  if (!out) return fail(LIARQ_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = new liarq_config{};
    return LIARQ_OK;
  });
}

void liarq_config_destroy(liarq_config* config) { delete config; }

liarq_status liarq_config_set(liarq_config* config, const char* key, const char* value) {
  if (!config || !key || !value) return fail(LIARQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    config->builder.set(key, value);
    return LIARQ_OK;
  });
}

liarq_status liarq_config_load_file(liarq_config* config, const char* path) {
  if (!config || !path) return fail(LIARQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    config->builder.load_file(path);
    return LIARQ_OK;
  });
}

liarq_status liarq_config_validate(const liarq_config* config) {
  if (!config) return fail(LIARQ_ERR_INVALID_ARGUMENT, "null config");
  return guarded([&] {
    (void)config->builder.build();
    return LIARQ_OK;
  });
}

liarq_status liarq_run(const liarq_config* config, liarq_result** out) {
  if (!config || !out) return fail(LIARQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const liarq::TrialConfig resolved = config->builder.build();
    *out = new liarq_result{liarq::run(resolved)};
    return LIARQ_OK;
  });
}

void liarq_result_destroy(liarq_result* result) { delete result; }

liarq_status liarq_result_write(const liarq_result* result, const char* path) {
  if (!result || !path) return fail(LIARQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    liarq::write_results_file(result->result, path);
    return LIARQ_OK;
  });
}

uint64_t liarq_result_trials(const liarq_result* result) { return result ? result->result.stats.trials : 0; }

uint64_t liarq_result_count(const liarq_result* result, liarq_outcome outcome) {
  const auto index = static_cast<std::size_t>(outcome);
  if (!result || index >= liarq::kOutcomeLabels.size()) return 0;
  return result->result.stats.counts[index];
}

liarq_status liarq_result_detection_rate(const liarq_result* result, double* rate, double* wilson_low,
                                         double* wilson_high) {
  if (!result) return fail(LIARQ_ERR_INVALID_ARGUMENT, "null result");
  const auto& d = result->result.stats.detection;
  if (rate) *rate = d.rate;
  if (wilson_low) *wilson_low = d.wilson_low;
  if (wilson_high) *wilson_high = d.wilson_high;
  return LIARQ_OK;
}

double liarq_result_wall_seconds(const liarq_result* result) { return result ? result->result.wall_seconds : 0.0; }

liarq_status liarq_result_summary_json(const liarq_result* result, char* buf, size_t cap, size_t* needed) {
  if (!result) return fail(LIARQ_ERR_INVALID_ARGUMENT, "null result");
  return guarded([&] {
    auto summary = liarq::to_json(result->result.stats);
    summary["config"] = result->result.config.to_json();
    return copy_text(summary.dump(), buf, cap, needed);
  });
}

liarq_status liarq_oracle_dump(double assignment_mixture, char* buf, size_t cap, size_t* needed) {
  return guarded([&] { return copy_text(liarq::dump_tables(assignment_mixture), buf, cap, needed); });
}

liarq_status liarq_singlet_amplitudes(int n, double* re, double* im, size_t cap, size_t* needed) {
  return guarded([&] {
    const liarq::StateVector s = liarq::make_singlet(n);
    if (needed) *needed = s.dimension();
    if (cap < s.dimension()) return fail(LIARQ_ERR_BUFFER_TOO_SMALL, "need " + std::to_string(s.dimension()) + " entries");
    if (!re || !im) return fail(LIARQ_ERR_INVALID_ARGUMENT, "null output array");
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      re[i] = s[i].real();
      im[i] = s[i].imag();
    }
    return LIARQ_OK;
  });
}

}  // extern "C"
