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

#include "cpr/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "cpr/error.hpp"
#include "text.hpp"

namespace cpr {
namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool all_valid(std::uint64_t label, std::uint64_t base, int n, int S) {
  for (int j = 0; j < n; ++j) {
    if (label % base >= static_cast<std::uint64_t>(S)) return false;
    label /= base;
  }
  return true;
}

void check_register(const EncodedState &state, const EnergyModel &model) {
  if (state.reg != model.reg() || state.params.n != model.params().n ||
      state.params.K != model.params().K)
    throw Error(ErrorCode::invalid_argument,
                "state register does not match the energy model");
}

}  // namespace

double EncodedState::norm() const {
  double s = 0.0;
  for (const auto &a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

void Schedule::validate() const {
  if (gammas.empty())
    throw Error(ErrorCode::invalid_argument, "schedule depth must be >= 1");
  if (gammas.size() != betas.size())
    throw Error(ErrorCode::invalid_argument, "gamma and beta counts differ");
}

Schedule Schedule::constant(double gamma, double beta, int depth) {
  if (depth < 1) throw Error(ErrorCode::invalid_argument, "depth must be >= 1");
  return {std::vector<double>(depth, gamma), std::vector<double>(depth, beta)};
}

std::optional<std::uint64_t> register_dimension(const EncodingParams &p,
                                                Register reg) {
  const auto base = static_cast<std::uint64_t>(
      reg == Register::onehot ? p.S : p.word_count());
  std::uint64_t d = 1;
  for (int j = 0; j < p.n; ++j) {
    if (d > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    d *= base;
  }
  return d;
}

EncodedState initial_state(const EncodingParams &p, Register reg,
                           std::uint64_t budget) {
  const auto dim = register_dimension(p, reg);
  if (!dim || *dim > budget)
    throw Error(ErrorCode::budget,
                "register dimension exceeds the amplitude budget of " +
                    std::to_string(budget));
  EncodedState st;
  st.reg = reg;
  st.params = p;
  const double amp = 1.0 / std::sqrt(static_cast<double>(ipow(p.S, p.n)));
  if (reg == Register::onehot) {
    st.amplitudes.assign(*dim, amplitude(amp, 0.0));
  } else {
    st.amplitudes.assign(*dim, amplitude(0.0, 0.0));
    const auto base = static_cast<std::uint64_t>(p.word_count());
    for (std::uint64_t z = 0; z < *dim; ++z)
      if (all_valid(z, base, p.n, p.S)) st.amplitudes[z] = amplitude(amp, 0.0);
  }
  return st;
}

Matrix<amplitude> block_mixer_matrix(int S, double beta) {
  if (S < 1) throw Error(ErrorCode::invalid_argument, "S must be >= 1");
  Matrix<amplitude> U(S, S);
  if (S == 1) {
    U(0, 0) = 1.0;
    return U;
  }
  const amplitude diag = std::polar(1.0, beta / (S - 1));
  const amplitude shift = (std::polar(1.0, -beta) - diag) / static_cast<double>(S);
  for (int u = 0; u < S; ++u)
    for (int v = 0; v < S; ++v) U(u, v) = (u == v ? diag : 0.0) + shift;
  return U;
}

EnergyTable::EnergyTable(const EnergyModel &model, std::uint64_t table_limit)
    : model_(&model) {
  const auto dim = model.dimension();
  if (dim <= table_limit) {
    values_.resize(dim);
    for (std::uint64_t z = 0; z < dim; ++z) values_[z] = model.energy(z);
  }
}

void apply_mixer(EncodedState &state, double beta) {
  const int n = state.params.n;
  const int S = state.params.S;
  if (S == 1) return;
  const auto base = static_cast<std::uint64_t>(state.base());
  const amplitude diag = std::polar(1.0, beta / (S - 1));
  const amplitude shift = (std::polar(1.0, -beta) - diag) / static_cast<double>(S);
  auto &a = state.amplitudes;
  const std::uint64_t dim = a.size();

  // U v = diag * v + shift * (sum v) * 1 on each block fiber; padded words
  // (digits >= S) are left untouched.
  std::uint64_t stride = dim;
  for (int j = 0; j < n; ++j) {
    stride /= base;
    const std::uint64_t chunk = stride * base;
    for (std::uint64_t outer = 0; outer < dim; outer += chunk) {
      for (std::uint64_t inner = 0; inner < stride; ++inner) {
        amplitude *fiber = a.data() + outer + inner;
        amplitude sum = 0.0;
        for (int d = 0; d < S; ++d) sum += fiber[d * stride];
        const amplitude add = shift * sum;
        for (int d = 0; d < S; ++d) fiber[d * stride] = diag * fiber[d * stride] + add;
      }
    }
  }
}

void apply_phase(EncodedState &state, double gamma, const EnergyTable &table) {
  check_register(state, table.model());
  auto &a = state.amplitudes;
  for (std::uint64_t z = 0; z < a.size(); ++z) {
    if (a[z] == amplitude(0.0, 0.0)) continue;
    a[z] *= std::polar(1.0, -gamma * table(z));
  }
}

void apply_phase(EncodedState &state, double gamma, const EnergyModel &model) {
  check_register(state, model);
  auto &a = state.amplitudes;
  for (std::uint64_t z = 0; z < a.size(); ++z) {
    if (a[z] == amplitude(0.0, 0.0)) continue;
    a[z] *= std::polar(1.0, -gamma * model.energy(z));
  }
}

EncodedState run_ansatz(const EnergyTable &table, const Schedule &schedule,
                        std::uint64_t budget) {
  schedule.validate();
  const auto &model = table.model();
  EncodedState st = initial_state(model.params(), model.reg(), budget);
  for (int l = 0; l < schedule.depth(); ++l) {
    apply_phase(st, schedule.gammas[l], table);
    apply_mixer(st, schedule.betas[l]);
  }
  return st;
}

EncodedState run_ansatz(const EnergyModel &model, const Schedule &schedule,
                        std::uint64_t budget) {
  schedule.validate();
  const auto dim = register_dimension(model.params(), model.reg());
  if (!dim || *dim > budget)
    throw Error(ErrorCode::budget,
                "register dimension exceeds the amplitude budget of " +
                    std::to_string(budget));
  const EnergyTable table(model);
  return run_ansatz(table, schedule, budget);
}

std::vector<double> probabilities(const EncodedState &state) {
  std::vector<double> p(state.amplitudes.size());
  for (std::size_t z = 0; z < p.size(); ++z) p[z] = std::norm(state.amplitudes[z]);
  return p;
}

std::map<std::uint64_t, double> exact_distribution(const EncodedState &state) {
  std::map<std::uint64_t, double> out;
  for (std::size_t z = 0; z < state.amplitudes.size(); ++z) {
    const double pz = std::norm(state.amplitudes[z]);
    if (pz > 0.0) out.emplace_hint(out.end(), z, pz);
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SampleSet sample(std::span<const double> probs, std::int64_t shots,
                 std::uint64_t seed) {
  if (shots < 1) throw Error(ErrorCode::invalid_argument, "shots must be >= 1");
  std::size_t last = probs.size();
  for (std::size_t z = probs.size(); z-- > 0;)
    if (probs[z] > 0.0) {
      last = z;
      break;
    }
  if (last == probs.size())
    throw Error(ErrorCode::invalid_argument, "distribution has no mass");

  std::mt19937_64 rng(seed);
  std::vector<std::pair<double, std::int64_t>> draws(static_cast<std::size_t>(shots));
  for (std::int64_t s = 0; s < shots; ++s)
    draws[s] = {static_cast<double>(rng() >> 11) * 0x1.0p-53, s};
  std::sort(draws.begin(), draws.end());

  SampleSet out;
  out.shots = shots;
  out.seed = seed;
  out.outcomes.resize(static_cast<std::size_t>(shots));
  std::size_t z = 0;
  double cum = 0.0;
  for (const auto &[u, idx] : draws) {
    while (z < probs.size() && (probs[z] <= 0.0 || cum + probs[z] <= u)) {
      cum += probs[z];
      ++z;
    }
    const std::uint64_t label = z < probs.size() ? z : last;
    out.outcomes[idx] = label;
    ++out.counts[label];
  }
  return out;
}

SampleSet sample(const EncodedState &state, std::int64_t shots, std::uint64_t seed) {
  const auto p = probabilities(state);
  return sample(p, shots, seed);
}

std::vector<int> label_digits(std::uint64_t label, const EncodingParams &p,
                              Register reg) {
  const auto base = static_cast<std::uint64_t>(
      reg == Register::onehot ? p.S : p.word_count());
  std::vector<int> d(p.n);
  for (int j = p.n - 1; j >= 0; --j) {
    d[j] = static_cast<int>(label % base);
    label /= base;
  }
  return d;
}

std::uint64_t digits_label(std::span<const int> digits, const EncodingParams &p,
                           Register reg) {
  const auto base = static_cast<std::uint64_t>(
      reg == Register::onehot ? p.S : p.word_count());
  std::uint64_t label = 0;
  for (int d : digits) label = label * base + static_cast<std::uint64_t>(d);
  return label;
}

std::string label_bits(std::uint64_t label, const EncodingParams &p, Register reg) {
  const auto d = label_digits(label, p, reg);
  if (reg == Register::onehot) return render_bits(onehot_from_symbols(d, p).bits);
  return render_bits(binary_from_words(d, p).bits);
}

std::string amplitude_csv(const EncodedState &state) {
  std::string out = "label,bitstring,re,im\n";
  for (std::size_t z = 0; z < state.amplitudes.size(); ++z) {
    const auto &a = state.amplitudes[z];
    if (a == amplitude(0.0, 0.0)) continue;
    out += std::to_string(z) + ',' + label_bits(z, state.params, state.reg) + ',' +
           detail::format_double(a.real()) + ',' + detail::format_double(a.imag()) +
           '\n';
  }
  return out;
}

std::string sample_csv(const SampleSet &s, const EncodingParams &p, Register reg) {
  std::string out = "bitstring,count\n";
  for (const auto &[label, c] : s.counts)
    out += label_bits(label, p, reg) + ',' + std::to_string(c) + '\n';
  return out;
}

}  // namespace cpr
