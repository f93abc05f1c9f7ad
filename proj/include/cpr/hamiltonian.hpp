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
#include <span>
#include <utility>
#include <vector>

#include "cpr/encoding.hpp"
#include "cpr/feasibility.hpp"
#include "cpr/instances.hpp"

namespace cpr {

enum class CapMode { hinge, quadratic_surrogate, filter_only };
enum class Register { onehot, binary };

const char *to_string(CapMode m);
const char *to_string(Register r);

struct PenaltyWeights {
  double once = 4.0;
  double cap = 4.0;
  double obj = 1.0;
  double pad = 4.0;
  CapMode cap_mode = CapMode::hinge;

  void validate() const;
};

/// Timeline cost data shared by CVRP and PDP: an item-to-item arc matrix plus
/// per-vehicle depot legs, with the resource weights used for capacity.
struct CostTables {
  int n = 0;
  int K = 0;
  Matrix<double> arc;     // n x n
  Matrix<double> dep_to;  // n x K
  Matrix<double> to_dep;  // n x K
  std::vector<std::int64_t> demand;
  std::vector<std::int64_t> capacity;

  static CostTables of(const Instance &inst);
  static CostTables of(const PdpInstance &pdp);

  LoadLimits limits() const { return {n, K, demand, capacity}; }
};

struct EnergyTerms {
  double once = 0.0;
  double cap = 0.0;
  double obj = 0.0;
  double pad = 0.0;

  double total() const { return once + cap + obj + pad; }
};

/// Cost of moving from symbol `from` at position j to `to` at position j+1:
/// the arc when both share a vehicle, otherwise close one route at its depot
/// and open the next.
double edge_cost(const CostTables &c, Symbol from, Symbol to);

/// lam * sum_i (count_i - 1)^2.
double energy_once(std::span<const int> counts, double lam);

/// Hinge: lam * sum_k max(0, D_k - Q_k)^2. Surrogate: lam * sum_k (D_k - Q)^2,
/// which requires uniform Q. Filter-only: 0.
double energy_capacity(std::span<const std::int64_t> loads,
                       std::span<const std::int64_t> capacity,
                       const PenaltyWeights &w);

/// lam * (depot start + sum of adjacent edge costs + depot end).
double energy_objective(const ColoredAssignment &a, const CostTables &c,
                        double lam_obj = 1.0);
double energy_objective(const ColoredAssignment &a, const Instance &inst,
                        double lam_obj = 1.0);
double energy_objective_pdp(const ColoredAssignment &a, const PdpInstance &pdp,
                            double lam_obj = 1.0);

/// Diagonal cost model over register basis labels. A label is the base-B
/// numeral of the per-block digits with block 0 most significant, where
/// B = S for the one-hot register and B = 2^q for the binary register.
class EnergyModel {
 public:
  EnergyModel(CostTables costs, PenaltyWeights weights,
              Register reg = Register::onehot);
  explicit EnergyModel(const Instance &inst, PenaltyWeights weights = {},
                       Register reg = Register::onehot);

  const CostTables &costs() const noexcept { return costs_; }
  const PenaltyWeights &weights() const noexcept { return weights_; }
  const EncodingParams &params() const noexcept { return params_; }
  Register reg() const noexcept { return reg_; }

  /// Digit alphabet size per block.
  std::int64_t base() const noexcept { return base_; }
  /// Register dimension base^n, saturating at UINT64_MAX.
  std::uint64_t dimension() const noexcept { return dimension_; }

  void digits(std::uint64_t label, std::span<int> out) const;
  std::vector<int> digits(std::uint64_t label) const;
  std::uint64_t label_of(std::span<const int> digits) const;

  /// Digits >= S (binary register only) are padded blocks: each adds
  /// lam_pad and is skipped by the once/capacity/objective sums.
  EnergyTerms terms(std::span<const int> digits) const;
  EnergyTerms terms(std::uint64_t label) const;
  double energy(std::uint64_t label) const;
  double energy_of_digits(std::span<const int> digits) const {
    return terms(digits).total();
  }

  /// lam_obj-weighted objective of a decoded block configuration.
  double objective(std::span<const int> symbols) const;

 private:
  CostTables costs_;
  PenaltyWeights weights_;
  EncodingParams params_;
  Register reg_;
  std::int64_t base_ = 0;
  std::uint64_t dimension_ = 0;
};

/// QUBO over the n^2 K one-hot variables, variable id = j S + (i + n k).
struct QuboExport {
  std::size_t num_variables = 0;
  std::map<std::size_t, double> linear;
  std::map<std::pair<std::size_t, std::size_t>, double> quadratic;  // i < j
  double constant = 0.0;

  double evaluate(std::span<const std::uint8_t> x) const;
};

/// Requires cap_mode != hinge (the hinge is not quadratic).
QuboExport export_qubo(const EnergyModel &model);

}  // namespace cpr
