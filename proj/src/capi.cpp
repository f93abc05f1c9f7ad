// Copyright 2026 The cpr Authors
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

#include "cpr/cpr.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cpr/error.hpp"
#include "service.hpp"

struct cpr_instance {
  cpr::service::Problem problem;
};

struct cpr_result {
  cpr::service::Artifacts items;
};

namespace {

thread_local std::string g_last_error;

cpr_status status_of(cpr::ErrorCode c) {
  switch (c) {
    case cpr::ErrorCode::invalid_argument: return CPR_E_INVALID_ARGUMENT;
    case cpr::ErrorCode::parse: return CPR_E_PARSE;
    case cpr::ErrorCode::io: return CPR_E_IO;
    case cpr::ErrorCode::codec: return CPR_E_CODEC;
    case cpr::ErrorCode::config: return CPR_E_CONFIG;
    case cpr::ErrorCode::budget: return CPR_E_BUDGET;
    case cpr::ErrorCode::ceiling: return CPR_E_CEILING;
    case cpr::ErrorCode::empty_optimal_set: return CPR_E_EMPTY_OPTIMAL_SET;
    case cpr::ErrorCode::unsupported: return CPR_E_UNSUPPORTED;
  }
  return CPR_E_INTERNAL;
}

template <class F>
cpr_status guarded(F &&f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const cpr::Error &e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc &) {
    g_last_error = "out of memory";
    return CPR_E_INTERNAL;
  } catch (const std::exception &e) {
    g_last_error = e.what();
    return CPR_E_INTERNAL;
  }
}

cpr_status null_argument(const char *what) {
  g_last_error = std::string("null argument: ") + what;
  return CPR_E_INVALID_ARGUMENT;
}

char *dup_string(const std::string &s) {
  char *p = static_cast<char *>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

cpr::service::RunConfig config_of(const char *config) {
  return cpr::service::RunConfig::from_json(config ? config : "");
}

}  // namespace

extern "C" {

const char *cpr_version(void) { return "1.0.0"; }

const char *cpr_status_name(cpr_status status) {
  switch (status) {
    case CPR_OK: return "ok";
    case CPR_E_INVALID_ARGUMENT: return "invalid-argument";
    case CPR_E_PARSE: return "parse";
    case CPR_E_IO: return "io";
    case CPR_E_CODEC: return "codec";
    case CPR_E_CONFIG: return "config";
    case CPR_E_BUDGET: return "budget";
    case CPR_E_CEILING: return "ceiling";
    case CPR_E_EMPTY_OPTIMAL_SET: return "empty-optimal-set";
    case CPR_E_UNSUPPORTED: return "unsupported";
    case CPR_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char *cpr_last_error(void) { return g_last_error.c_str(); }

void cpr_string_free(char *s) { std::free(s); }

cpr_status cpr_instance_load(const char *path, int K, cpr_rounding rounding,
                             cpr_instance **out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    auto *h = new cpr_instance{cpr::service::load_problem(
        path, K, rounding == CPR_ROUNDING_NEAREST ? cpr::Rounding::nearest
                                                  : cpr::Rounding::exact)};
    *out = h;
    return CPR_OK;
  });
}

cpr_status cpr_instance_from_json(const char *json, cpr_instance **out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cpr_instance{cpr::service::problem_from_json(json)};
    return CPR_OK;
  });
}

void cpr_instance_free(cpr_instance *inst) { delete inst; }

cpr_status cpr_instance_size(const cpr_instance *inst, int *n, int *K) {
  if (!inst) return null_argument("inst");
  if (n) *n = inst->problem.costs.n;
  if (K) *K = inst->problem.costs.K;
  return CPR_OK;
}

cpr_status cpr_qubit_counts(int n, int K, int64_t *onehot, int64_t *binary) {
  return guarded([&] {
    const auto [a, b] = cpr::qubit_counts(n, K);
    if (onehot) *onehot = a;
    if (binary) *binary = b;
    return CPR_OK;
  });
}

cpr_status cpr_solve(const cpr_instance *inst, const char *config, cpr_result **out) {
  if (!inst) return null_argument("inst");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cpr_result{cpr::service::run_solve(inst->problem, config_of(config))};
    return CPR_OK;
  });
}

cpr_status cpr_brute(const cpr_instance *inst, const char *config, cpr_result **out) {
  if (!inst) return null_argument("inst");
  if (!out) return null_argument("out");
  return guarded([&] {
    bool empty = false;
    *out = new cpr_result{cpr::service::run_brute(inst->problem, config_of(config), empty)};
    if (empty) {
      g_last_error = "no feasible configuration exists";
      return CPR_E_EMPTY_OPTIMAL_SET;
    }
    return CPR_OK;
  });
}

cpr_status cpr_bound(const cpr_instance *inst, const char *config, cpr_result **out) {
  if (!inst) return null_argument("inst");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cpr_result{cpr::service::run_bound(inst->problem, config_of(config))};
    return CPR_OK;
  });
}

cpr_status cpr_bench(const char *directory, const char *config, cpr_result **out) {
  if (!directory) return null_argument("directory");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cpr_result{cpr::service::run_bench(directory, config_of(config))};
    return CPR_OK;
  });
}

size_t cpr_result_count(const cpr_result *res) { return res ? res->items.size() : 0; }

cpr_status cpr_result_item(const cpr_result *res, size_t i, const char **name,
                           const char **text) {
  if (!res) return null_argument("res");
  if (i >= res->items.size()) {
    g_last_error = "result index out of range";
    return CPR_E_INVALID_ARGUMENT;
  }
  if (name) *name = res->items[i].first.c_str();
  if (text) *text = res->items[i].second.c_str();
  return CPR_OK;
}

cpr_status cpr_result_get(const cpr_result *res, const char *name, const char **text) {
  if (!res) return null_argument("res");
  if (!name) return null_argument("name");
  if (!text) return null_argument("text");
  for (const auto &[k, v] : res->items)
    if (k == name) {
      *text = v.c_str();
      return CPR_OK;
    }
  g_last_error = std::string("no artifact named '") + name + "'";
  return CPR_E_INVALID_ARGUMENT;
}

void cpr_result_free(cpr_result *res) { delete res; }

cpr_status cpr_check(const cpr_instance *inst, const char *config, const char *line,
                     cpr_check_outcome *outcome, char **verdict_json) {
  if (!inst) return null_argument("inst");
  if (!line) return null_argument("line");
  if (!outcome) return null_argument("outcome");
  if (!verdict_json) return null_argument("verdict_json");
  return guarded([&] {
    cpr::service::LineOutcome o;
    const auto v = cpr::service::check_line(inst->problem, config_of(config), line, o);
    switch (o) {
      case cpr::service::LineOutcome::feasible: *outcome = CPR_CHECK_FEASIBLE; break;
      case cpr::service::LineOutcome::infeasible: *outcome = CPR_CHECK_INFEASIBLE; break;
      case cpr::service::LineOutcome::malformed: *outcome = CPR_CHECK_MALFORMED; break;
      case cpr::service::LineOutcome::blank: *outcome = CPR_CHECK_BLANK; break;
    }
    *verdict_json = dup_string(v);
    return CPR_OK;
  });
}

cpr_status cpr_encode(int n, int K, const char *assignment, char **json) {
  if (!assignment) return null_argument("assignment");
  if (!json) return null_argument("json");
  return guarded([&] {
    *json = dup_string(cpr::service::encode_text(n, K, assignment));
    return CPR_OK;
  });
}

cpr_status cpr_decode(int n, int K, cpr_register reg, const char *bits, char **json) {
  if (!bits) return null_argument("bits");
  if (!json) return null_argument("json");
  return guarded([&] {
    *json = dup_string(cpr::service::decode_text(
        n, K, reg == CPR_REGISTER_BINARY ? cpr::Register::binary : cpr::Register::onehot,
        bits));
    return CPR_OK;
  });
}

cpr_status cpr_resolve_config(const char *config, char **json) {
  if (!json) return null_argument("json");
  return guarded([&] {
    *json = dup_string(config_of(config).to_json().dump(2) + "\n");
    return CPR_OK;
  });
}

}  // extern "C"
