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

// Command-level workflows behind the C API: resolved run configuration,
// problem loading and the text artifacts each command produces.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cpr/hamiltonian.hpp"
#include "cpr/instances.hpp"
#include "cpr/solver.hpp"

namespace cpr::service {

struct Preselect {
  double lambda = 0.0;
  double rho = 0.0;
  double alpha = 0.0;
};

struct RunConfig {
  int K = 2;
  Register reg = Register::onehot;
  PenaltyWeights weights;
  Rounding rounding = Rounding::exact;
  std::optional<int> grid_points;
  ShotsRule shots_rule = ShotsRule::cubed;
  std::optional<std::int64_t> shots;
  std::uint64_t seed = 1;
  int depth = 1;
  int jobs = 1;
  std::uint64_t budget = kDefaultAmplitudeBudget;
  bool score_full = false;
  int ceiling = kDefaultEnumerationCeiling;
  std::optional<double> gamma;
  std::optional<std::vector<double>> betas;
  std::vector<double> confidences{0.9, 0.95, 0.99};
  std::optional<Preselect> preselect;
  bool bench_phqc = true;

  /// Missing keys take defaults; unknown keys are a config error.
  static RunConfig from_json(std::string_view text);
  nlohmann::ordered_json to_json() const;
};

/// A loaded CVRP or PDP problem reduced to its cost tables.
struct Problem {
  std::string name;
  std::string kind;  // "cvrp" or "pdp"
  Rounding rounding = Rounding::exact;
  CostTables costs;

  EncodingParams params() const { return EncodingParams::make(costs.n, costs.K); }
};

Problem load_problem(const std::string &path, int K, Rounding rounding);
Problem problem_from_json(std::string_view text);

using Artifacts = std::vector<std::pair<std::string, std::string>>;

Artifacts run_solve(const Problem &pb, const RunConfig &cfg);
/// Sets `empty` when no configuration is feasible.
Artifacts run_brute(const Problem &pb, const RunConfig &cfg, bool &empty);
Artifacts run_bound(const Problem &pb, const RunConfig &cfg);
Artifacts run_bench(const std::string &dir, const RunConfig &cfg);

enum class LineOutcome { feasible, infeasible, malformed, blank };
/// One JSON verdict per input line.
std::string check_line(const Problem &pb, const RunConfig &cfg, std::string_view line,
                       LineOutcome &outcome);

std::string encode_text(int n, int K, std::string_view assignment);
std::string decode_text(int n, int K, Register reg, std::string_view bits);

}  // namespace cpr::service
