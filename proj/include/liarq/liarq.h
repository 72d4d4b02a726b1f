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

/* C interface to the liarq simulator.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns a liarq_status; on failure a description is
 * available from liarq_last_error() on the calling thread until the next
 * call from that thread.
 *
 * Functions that produce text use the caller-buffer convention: *needed
 * receives the size including the terminating NUL; if cap is smaller the call
 * returns LIARQ_ERR_BUFFER_TOO_SMALL and leaves buf untouched. Pass
 * buf = NULL, cap = 0 to query the size.
 */

#ifndef LIARQ_H
#define LIARQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LIARQ_BUILDING)
#define LIARQ_API __declspec(dllexport)
#else
#define LIARQ_API __declspec(dllimport)
#endif
#else
#define LIARQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum liarq_status {
  LIARQ_OK = 0,
  LIARQ_ERR_INVALID_ARGUMENT = 1, /* null handle or pointer */
  LIARQ_ERR_CONFIG = 2,           /* unknown key, malformed value, inconsistent sizes */
  LIARQ_ERR_DOMAIN = 3,
  LIARQ_ERR_RESOURCE = 4,
  LIARQ_ERR_PROTOCOL = 5,
  LIARQ_ERR_IO = 6,
  LIARQ_ERR_BUFFER_TOO_SMALL = 7,
  LIARQ_ERR_INTERNAL = 8
} liarq_status;

typedef enum liarq_outcome {
  LIARQ_OUTCOME_CONSISTENT = 0,
  LIARQ_OUTCOME_A_IS_LIAR = 1,
  LIARQ_OUTCOME_B_IS_LIAR = 2,
  LIARQ_OUTCOME_B_REJECTED = 3,
  LIARQ_OUTCOME_UNRESOLVED = 4,
  LIARQ_OUTCOME_ABORTED = 5
} liarq_outcome;

typedef struct liarq_config liarq_config;
typedef struct liarq_result liarq_result;

LIARQ_API const char* liarq_version(void);
LIARQ_API const char* liarq_status_string(liarq_status status);
LIARQ_API const char* liarq_last_error(void);

LIARQ_API liarq_status liarq_config_create(liarq_config** out);
LIARQ_API void liarq_config_destroy(liarq_config* config);
/* Keys: seed trials M N1 N2 L strategy_a strategy_b qubit_loss_prob
 * source_state min_fraction direction_policy list_direction_policy
 * assignment_mixture cross_check threads. Later settings win. */
LIARQ_API liarq_status liarq_config_set(liarq_config* config, const char* key, const char* value);
/* key=value lines; '#' starts a comment line. */
LIARQ_API liarq_status liarq_config_load_file(liarq_config* config, const char* path);
/* Resolves and checks the configuration without running it. */
LIARQ_API liarq_status liarq_config_validate(const liarq_config* config);

LIARQ_API liarq_status liarq_run(const liarq_config* config, liarq_result** out);
LIARQ_API void liarq_result_destroy(liarq_result* result);
/* Newline-delimited JSON: one trial object per line, then a summary line. */
LIARQ_API liarq_status liarq_result_write(const liarq_result* result, const char* path);
LIARQ_API uint64_t liarq_result_trials(const liarq_result* result);
LIARQ_API uint64_t liarq_result_count(const liarq_result* result, liarq_outcome outcome);
LIARQ_API liarq_status liarq_result_detection_rate(const liarq_result* result, double* rate, double* wilson_low,
                                                   double* wilson_high);
LIARQ_API double liarq_result_wall_seconds(const liarq_result* result);
LIARQ_API liarq_status liarq_result_summary_json(const liarq_result* result, char* buf, size_t cap, size_t* needed);

/* Text dump of the exact outcome tables and escape probabilities. */
LIARQ_API liarq_status liarq_oracle_dump(double assignment_mixture, char* buf, size_t cap, size_t* needed);
/* Real and imaginary parts of the n-qubit singlet amplitudes (2^n each). */
LIARQ_API liarq_status liarq_singlet_amplitudes(int n, double* re, double* im, size_t cap, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* LIARQ_H */
