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

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cpr/encoding.hpp"
#include "cpr/hamiltonian.hpp"
#include "cpr/matrix.hpp"

namespace cpr {

using amplitude = std::complex<double>;

inline constexpr std::uint64_t kDefaultAmplitudeBudget = std::uint64_t{1} << 27;
inline constexpr std::uint64_t kEnergyTableLimit = std::uint64_t{1} << 22;

/// Statevector over block digit labels (see EnergyModel for the numbering).
struct EncodedState {
  std::vector<amplitude> amplitudes;
  Register reg = Register::onehot;
  EncodingParams params;

  std::int64_t base() const {
    return reg == Register::onehot ? params.S : params.word_count();
  }
  double norm() const;
};

struct Schedule {
  std::vector<double> gammas;
  std::vector<double> betas;

  int depth() const { return static_cast<int>(gammas.size()); }
  void validate() const;
  /// Same (gamma, beta) repeated in every layer.
  static Schedule constant(double gamma, double beta, int depth);
};

struct SampleSet {
  std::map<std::uint64_t, std::int64_t> counts;
  std::vector<std::uint64_t> outcomes;  // shot order
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
};

/// Digit count base^n, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> register_dimension(const EncodingParams &p, Register reg);

EncodedState initial_state(const EncodingParams &p, Register reg,
                           std::uint64_t budget = kDefaultAmplitudeBudget);

/// exp(-i beta (J - I)/(S - 1)); the 1x1 identity when S == 1.
Matrix<amplitude> block_mixer_matrix(int S, double beta);

/// Diagonal energies indexed by label, or evaluated on the fly when the
/// register exceeds the table limit.
class EnergyTable {
 public:
  explicit EnergyTable(const EnergyModel &model,
                       std::uint64_t table_limit = kEnergyTableLimit);

  bool materialized() const noexcept { return !values_.empty(); }
  double operator()(std::uint64_t label) const {
    return materialized() ? values_[label] : model_->energy(label);
  }
  const EnergyModel &model() const noexcept { return *model_; }

 private:
  const EnergyModel *model_;
  std::vector<double> values_;
};

void apply_mixer(EncodedState &state, double beta);
void apply_phase(EncodedState &state, double gamma, const EnergyModel &model);
void apply_phase(EncodedState &state, double gamma, const EnergyTable &table);

EncodedState run_ansatz(const EnergyModel &model, const Schedule &schedule,
                        std::uint64_t budget = kDefaultAmplitudeBudget);
EncodedState run_ansatz(const EnergyTable &table, const Schedule &schedule,
                        std::uint64_t budget = kDefaultAmplitudeBudget);

std::vector<double> probabilities(const EncodedState &state);
/// Nonzero |amplitude|^2 entries only.
std::map<std::uint64_t, double> exact_distribution(const EncodedState &state);

/// Multinomial draw over labels 0..probs.size()-1.
SampleSet sample(std::span<const double> probs, std::int64_t shots,
                 std::uint64_t seed);
SampleSet sample(const EncodedState &state, std::int64_t shots, std::uint64_t seed);

/// splitmix64 mix of (base, index); used for per-task seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Bitstring of a label in the register's own layout.
std::string label_bits(std::uint64_t label, const EncodingParams &p, Register reg);
std::vector<int> label_digits(std::uint64_t label, const EncodingParams &p,
                              Register reg);
std::uint64_t digits_label(std::span<const int> digits, const EncodingParams &p,
                           Register reg);

/// CSV rows "label,bitstring,re,im" for every nonzero amplitude.
std::string amplitude_csv(const EncodedState &state);
/// CSV rows "bitstring,count" in label order.
std::string sample_csv(const SampleSet &s, const EncodingParams &p, Register reg);

}  // namespace cpr
