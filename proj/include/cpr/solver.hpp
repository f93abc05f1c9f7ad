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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cpr/analysis.hpp"
#include "cpr/encoding.hpp"
#include "cpr/hamiltonian.hpp"
#include "cpr/simulator.hpp"

namespace cpr {

std::vector<double> linspace(double lo, double hi, int points);

struct GridSpec {
  std::vector<double> gammas;
  std::vector<double> betas;

  /// linspace(0, pi, points) on both axes; points = S + 1 when omitted.
  static GridSpec uniform(const EncodingParams &p, std::optional<int> points = {});
  std::size_t size() const { return gammas.size() * betas.size(); }
};

enum class ShotsRule { cubed, fifty_cubed };
const char *to_string(ShotsRule r);

/// (nK)^3, or 50 (nK)^3.
std::int64_t default_shots(const EncodingParams &p, ShotsRule rule = ShotsRule::cubed);

inline constexpr int kDefaultEnumerationCeiling = 9;

struct ExactSolution {
  double optimal_cost = 0.0;
  std::vector<ColoredAssignment> optimal_assignments;  // lexicographic by symbols
  std::int64_t feasible_count = 0;

  /// Register labels of the optimal assignments.
  std::vector<std::uint64_t> optimal_labels(const EncodingParams &p,
                                            Register reg) const;
};

/// Enumerates customer orders times contiguous vehicle labelings, keeps those
/// within capacity, and scores each by the unweighted routing objective.
/// An empty feasible set leaves optimal_assignments empty and the cost +inf.
ExactSolution exact_solve(const CostTables &costs,
                          int ceiling = kDefaultEnumerationCeiling);

struct PhqcOptions {
  GridSpec grid;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  int depth = 1;
  bool score_full = false;  // full diagonal energy instead of the objective
  int jobs = 1;
  std::uint64_t budget = kDefaultAmplitudeBudget;
  /// Enables optimal_hits and p_star_exact per point.
  const ExactSolution *reference = nullptr;
};

struct PointRecord {
  std::size_t index = 0;
  double gamma = 0.0;
  double beta = 0.0;
  std::int64_t feasible_count = 0;
  std::optional<std::int64_t> optimal_hits;
  std::optional<double> p_star_exact;
  double share_above_baseline = 0.0;
  std::optional<double> best_score;  // best accepted score at this point
};

struct PhqcResult {
  std::optional<std::vector<int>> best_symbols;
  std::optional<OneHotBits> best_bitstring;
  std::optional<double> best_score;
  std::size_t best_point = 0;
  std::int64_t best_shot = 0;
  std::vector<PointRecord> points;
  std::int64_t total_shots = 0;
  std::int64_t filtered_strings = 0;
  /// Samples drawn at best_point (point 0 when nothing was accepted).
  SampleSet best_point_samples;
};

PhqcResult phqc(const EnergyModel &model, const PhqcOptions &opts);

/// Exact optimal mass under the ansatz output at constant (gamma, beta).
double p_star(const EnergyModel &model, const ExactSolution &exact, double gamma,
              double beta, int depth = 1,
              std::uint64_t budget = kDefaultAmplitudeBudget);

/// Unweighted objective of a symbol sequence.
double route_cost(const CostTables &c, std::span<const int> symbols);

}  // namespace cpr
