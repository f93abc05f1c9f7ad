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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cpr/encoding.hpp"
#include "cpr/hamiltonian.hpp"
#include "cpr/simulator.hpp"

namespace cpr {

/// (1/(p+1)) |sum_{r=0..p} e^{i r theta}|^2.
double fejer_kernel(int p, double theta);

/// Wraps into [0, 2 pi).
double wrap_phase(double theta);
/// Circle distance in [0, pi].
double dist_T(double a, double b);

/// Wrapped phases gamma E(z) over every label of a one-hot model.
struct PhaseProfile {
  double gamma = 0.0;
  std::vector<double> theta;
  double theta_star = 0.0;
  double delta = 0.0;
  std::vector<std::uint64_t> optimal;  // sorted labels
};

PhaseProfile phase_profile(const EnergyModel &model, double gamma,
                           std::span<const std::uint64_t> optimal_set);

/// Product distribution over one-hot labels kept as per-block marginals.
struct EnvelopeState {
  int n = 0;
  int S = 0;
  std::vector<std::vector<double>> blocks;

  double probability(std::uint64_t label) const;
  std::vector<double> full() const;
};

/// Per-block |U_blk(beta)|^2 updates, one per beta, from the uniform
/// product (or from `initial` when given, one distribution per block).
EnvelopeState envelope(const EncodingParams &p, std::span<const double> betas,
                       const std::vector<std::vector<double>> *initial = nullptr);

struct FejerReport {
  int p = 0;
  double gamma = 0.0;
  std::size_t optimal_count = 0;
  std::uint64_t dimension = 0;
  double theta_star = 0.0;
  double delta = 0.0;
  bool degenerate = false;  // delta == 0
  double C_beta = 0.0;
  double M_p_delta = 0.0;  // max of F_p over the realized off-peak phases
  std::optional<double> M_p_bound;  // 1/((p+1) sin^2(delta/2)); none when delta == 0
  double M_p_sup = 0.0;  // sup of F_p over dist >= delta, dense sweep
  double q0_lower = 0.0;
  double q0_exact_ref = 0.0;
  std::map<double, std::int64_t> required_shots;  // confidence -> shots
};

FejerReport fejer_bound(const PhaseProfile &profile, const EnvelopeState &env,
                        int p, std::span<const double> confidences = {});

/// ceil(ln(1/(1-confidence)) / p_star).
std::int64_t required_shots(double p_star, double confidence);

/// Pair feature "block j holds `from` and block j+1 holds `to`".
struct LpPairWeight {
  int position = 0;
  int from = 0;
  int to = 0;
  double weight = 0.0;
};

struct SurrogateWeights {
  double lambda = 1.0;
  double rho = 0.0;
  double alpha = 0.0;
};

struct PreselectRow {
  double beta = 0.0;
  double mu = 0.0;
  double sigma = 0.0;
  double log_z = 0.0;
  double s_lp = 0.0;
  double score = 0.0;
};

struct PreselectResult {
  double beta_star = 0.0;
  std::size_t index = 0;
  std::vector<PreselectRow> rows;
};

/// Scores log Z_lambda + alpha S_LP - rho sigma over the beta grid and returns
/// the first maximizer. Costs are the model energies; each beta is used in
/// all `depth` layers.
PreselectResult angle_preselect(const EnergyModel &model,
                                std::span<const double> beta_grid,
                                const SurrogateWeights &w, int depth = 1,
                                std::span<const LpPairWeight> lp = {},
                                const std::vector<std::vector<double>> *initial = nullptr);

struct HistogramRow {
  std::uint64_t label = 0;
  std::string bitstring;
  std::int64_t count = 0;
  double frequency = 0.0;
  double ratio = 0.0;  // frequency * D
};

struct AnticoncentrationReport {
  std::uint64_t D = 0;
  double baseline = 0.0;
  std::size_t feasible_outcomes = 0;
  std::size_t above_baseline = 0;
  double share_above_baseline = 0.0;
  std::vector<HistogramRow> histogram;  // feasible outcomes, count desc
};

AnticoncentrationReport anticoncentration_report(const SampleSet &samples,
                                                 const EnergyModel &model);

std::string histogram_csv(const AnticoncentrationReport &r);

}  // namespace cpr
