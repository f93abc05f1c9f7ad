/*
 * Copyright 2026 The cpr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the colored-permutation routing library.
 *
 * Every call returns a cpr_status. On failure, cpr_last_error() returns a
 * thread-local message describing the most recent error on the calling
 * thread. Strings returned through char** out-parameters are owned by the
 * caller and released with cpr_string_free(). Text reachable through a
 * cpr_result stays valid until cpr_result_free().
 *
 * Config arguments are JSON objects (NULL or "" for defaults); see the
 * README for the recognized keys.
 */

#ifndef CPR_CPR_H
#define CPR_CPR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CPR_BUILDING_LIBRARY)
#define CPR_API __declspec(dllexport)
#else
#define CPR_API __declspec(dllimport)
#endif
#else
#define CPR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cpr_status {
  CPR_OK = 0,
  CPR_E_INVALID_ARGUMENT = 1,
  CPR_E_PARSE = 2,
  CPR_E_IO = 3,
  CPR_E_CODEC = 4,
  CPR_E_CONFIG = 5,
  CPR_E_BUDGET = 6,
  CPR_E_CEILING = 7,
  CPR_E_EMPTY_OPTIMAL_SET = 8,
  CPR_E_UNSUPPORTED = 9,
  CPR_E_INTERNAL = 100
} cpr_status;

typedef enum cpr_register { CPR_REGISTER_ONEHOT = 0, CPR_REGISTER_BINARY = 1 } cpr_register;

typedef enum cpr_rounding { CPR_ROUNDING_EXACT = 0, CPR_ROUNDING_NEAREST = 1 } cpr_rounding;

typedef enum cpr_check_outcome {
  CPR_CHECK_FEASIBLE = 0,
  CPR_CHECK_INFEASIBLE = 1,
  CPR_CHECK_MALFORMED = 2,
  CPR_CHECK_BLANK = 3
} cpr_check_outcome;

typedef struct cpr_instance cpr_instance;
typedef struct cpr_result cpr_result;

CPR_API const char *cpr_version(void);
CPR_API const char *cpr_status_name(cpr_status status);
CPR_API const char *cpr_last_error(void);
CPR_API void cpr_string_free(char *s);

/* Instances: TSPLIB .vrp text or a JSON matrix record (CVRP or PDP). K and
 * rounding apply to .vrp files only. */
CPR_API cpr_status cpr_instance_load(const char *path, int K, cpr_rounding rounding,
                                     cpr_instance **out);
CPR_API cpr_status cpr_instance_from_json(const char *json, cpr_instance **out);
CPR_API void cpr_instance_free(cpr_instance *inst);
CPR_API cpr_status cpr_instance_size(const cpr_instance *inst, int *n, int *K);

CPR_API cpr_status cpr_qubit_counts(int n, int K, int64_t *onehot, int64_t *binary);

/* Commands. Each fills *out with named text artifacts. cpr_brute sets *out
 * and returns CPR_E_EMPTY_OPTIMAL_SET when nothing is feasible. */
CPR_API cpr_status cpr_solve(const cpr_instance *inst, const char *config,
                             cpr_result **out);
CPR_API cpr_status cpr_brute(const cpr_instance *inst, const char *config,
                             cpr_result **out);
CPR_API cpr_status cpr_bound(const cpr_instance *inst, const char *config,
                             cpr_result **out);
CPR_API cpr_status cpr_bench(const char *directory, const char *config,
                             cpr_result **out);

CPR_API size_t cpr_result_count(const cpr_result *res);
/* Name and text of the i-th artifact; either out-pointer may be NULL. */
CPR_API cpr_status cpr_result_item(const cpr_result *res, size_t i, const char **name,
                                   const char **text);
/* Text of the artifact with the given name. */
CPR_API cpr_status cpr_result_get(const cpr_result *res, const char *name,
                                  const char **text);
CPR_API void cpr_result_free(cpr_result *res);

/* Feasibility verdict for one input line, as a single-line JSON object. */
CPR_API cpr_status cpr_check(const cpr_instance *inst, const char *config,
                             const char *line, cpr_check_outcome *outcome,
                             char **verdict_json);

/* Codec round trips; outputs are single-line JSON objects. */
CPR_API cpr_status cpr_encode(int n, int K, const char *assignment, char **json);
CPR_API cpr_status cpr_decode(int n, int K, cpr_register reg, const char *bits,
                              char **json);

/* Resolved config (defaults filled in) as JSON. */
CPR_API cpr_status cpr_resolve_config(const char *config, char **json);

#ifdef __cplusplus
}
#endif

#endif /* CPR_CPR_H */
