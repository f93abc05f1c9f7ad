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

#include "cpr/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cpr/error.hpp"
#include "cpr/feasibility.hpp"
#include "text.hpp"

namespace cpr {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t checked_dimension(const EnergyModel &model) {
  const auto dim = model.dimension();
  if (dim > kDefaultAmplitudeBudget)
    throw Error(ErrorCode::budget, "register too large for dense analysis");
  return dim;
}

void require_onehot(const EnergyModel &model) {
  if (model.reg() != Register::onehot)
    throw Error(ErrorCode::unsupported, "analysis requires the one-hot register");
}

}  // namespace

double fejer_kernel(int p, double theta) {
  if (p < 0) throw Error(ErrorCode::invalid_argument, "filter order must be >= 0");
  const double t = wrap_phase(theta);
  const double s = std::sin(0.5 * t);
  const double m = p + 1.0;
  if (std::abs(s) < 1e-4) {
    double re = 0.0;
    double im = 0.0;
    for (int r = 0; r <= p; ++r) {
      re += std::cos(r * t);
      im += std::sin(r * t);
    }
    return (re * re + im * im) / m;
  }
  const double num = std::sin(0.5 * m * t);
  return num * num / (s * s) / m;
}

double wrap_phase(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double dist_T(double a, double b) {
  const double d = wrap_phase(a - b);
  return std::min(d, kTwoPi - d);
}

PhaseProfile phase_profile(const EnergyModel &model, double gamma,
                           std::span<const std::uint64_t> optimal_set) {
  if (optimal_set.empty())
    throw Error(ErrorCode::empty_optimal_set, "optimal set is empty");
  const auto dim = checked_dimension(model);

  PhaseProfile pr;
  pr.gamma = gamma;
  pr.optimal.assign(optimal_set.begin(), optimal_set.end());
  std::sort(pr.optimal.begin(), pr.optimal.end());
  pr.optimal.erase(std::unique(pr.optimal.begin(), pr.optimal.end()), pr.optimal.end());
  if (pr.optimal.back() >= dim)
    throw Error(ErrorCode::invalid_argument, "optimal label out of range");

  const double e_star = model.energy(pr.optimal.front());
  for (auto z : pr.optimal) {
    const double e = model.energy(z);
    if (std::abs(e - e_star) > 1e-9 * std::max(1.0, std::abs(e_star)))
      throw Error(ErrorCode::invalid_argument,
                  "optimal labels do not share one energy");
  }
  pr.theta.resize(dim);
  for (std::uint64_t z = 0; z < dim; ++z)
    pr.theta[z] = wrap_phase(gamma * model.energy(z));
  pr.theta_star = wrap_phase(gamma * e_star);

  pr.delta = std::numbers::pi;
  std::size_t next = 0;
  for (std::uint64_t z = 0; z < dim; ++z) {
    if (next < pr.optimal.size() && pr.optimal[next] == z) {
      ++next;
      continue;
    }
    pr.delta = std::min(pr.delta, dist_T(pr.theta[z], pr.theta_star));
  }
  return pr;
}

double EnvelopeState::probability(std::uint64_t label) const {
  double w = 1.0;
  for (int j = n - 1; j >= 0; --j) {
    w *= blocks[j][label % S];
    label /= S;
  }
  return w;
}

std::vector<double> EnvelopeState::full() const {
  std::vector<double> w{1.0};
  for (int j = 0; j < n; ++j) {
    std::vector<double> next;
    next.reserve(w.size() * S);
    for (double a : w)
      for (int s = 0; s < S; ++s) next.push_back(a * blocks[j][s]);
    w = std::move(next);
  }
  return w;
}

EnvelopeState envelope(const EncodingParams &p, std::span<const double> betas,
                       const std::vector<std::vector<double>> *initial) {
  EnvelopeState env;
  env.n = p.n;
  env.S = p.S;
  if (initial) {
    if (static_cast<int>(initial->size()) != p.n)
      throw Error(ErrorCode::invalid_argument, "initial envelope needs n blocks");
    for (const auto &b : *initial) {
      if (static_cast<int>(b.size()) != p.S)
        throw Error(ErrorCode::invalid_argument, "initial block needs S entries");
      for (double x : b)
        if (!(x >= 0.0))
          throw Error(ErrorCode::invalid_argument, "initial envelope is negative");
    }
    env.blocks = *initial;
  } else {
    env.blocks.assign(p.n, std::vector<double>(p.S, 1.0 / p.S));
  }

  std::vector<double> tmp(p.S);
  for (double beta : betas) {
    const auto U = block_mixer_matrix(p.S, beta);
    for (auto &v : env.blocks) {
      for (int u = 0; u < p.S; ++u) {
        double acc = 0.0;
        for (int w = 0; w < p.S; ++w) acc += std::norm(U(u, w)) * v[w];
        tmp[u] = acc;
      }
      v = tmp;
    }
  }
  return env;
}

std::int64_t required_shots(double p_star, double confidence) {
  if (!(p_star > 0.0) || p_star > 1.0)
    throw Error(ErrorCode::invalid_argument, "p_star must lie in (0, 1]");
  if (!(confidence > 0.0) || !(confidence < 1.0))
    throw Error(ErrorCode::invalid_argument, "confidence must lie in (0, 1)");
  return static_cast<std::int64_t>(std::ceil(std::log(1.0 / (1.0 - confidence)) / p_star));
}

FejerReport fejer_bound(const PhaseProfile &profile, const EnvelopeState &env,
                        int p, std::span<const double> confidences) {
  if (profile.optimal.empty())
    throw Error(ErrorCode::empty_optimal_set, "optimal set is empty");
  if (p < 0) throw Error(ErrorCode::invalid_argument, "filter order must be >= 0");
  const std::uint64_t dim = profile.theta.size();
  const double m = p + 1.0;

  FejerReport r;
  r.p = p;
  r.gamma = profile.gamma;
  r.optimal_count = profile.optimal.size();
  r.dimension = dim;
  r.theta_star = profile.theta_star;
  r.delta = profile.delta;
  r.degenerate = profile.delta == 0.0;

  double c_beta = 0.0;
  double off_mass = 0.0;  // sum over non-optimal z of W(z) F_p(theta_z - theta*)
  double m_real = 0.0;
  std::size_t next = 0;
  for (std::uint64_t z = 0; z < dim; ++z) {
    const double w = env.probability(z);
    if (next < profile.optimal.size() && profile.optimal[next] == z) {
      ++next;
      c_beta += w;
      continue;
    }
    const double f = fejer_kernel(p, profile.theta[z] - profile.theta_star);
    m_real = std::max(m_real, f);
    off_mass += w * f;
  }
  r.C_beta = std::clamp(c_beta, 0.0, 1.0);
  r.M_p_delta = r.degenerate ? m : m_real;
  if (!r.degenerate) {
    const double s = std::sin(0.5 * r.delta);
    r.M_p_bound = 1.0 / (m * s * s);
  }
  constexpr int kSweep = 4096;
  r.M_p_sup = 0.0;
  for (int i = 0; i <= kSweep; ++i) {
    const double t = r.delta + (std::numbers::pi - r.delta) * i / kSweep;
    r.M_p_sup = std::max(r.M_p_sup, fejer_kernel(p, t));
  }

  const double peak = m * r.C_beta;
  const double denom = peak + r.M_p_delta * (1.0 - r.C_beta);
  r.q0_lower = r.C_beta >= 1.0 ? 1.0 : (denom > 0.0 ? peak / denom : 0.0);
  const double total = m * c_beta + off_mass;
  r.q0_exact_ref = total > 0.0 ? m * c_beta / total : 0.0;
  if (r.q0_lower > 0.0)
    for (double c : confidences) r.required_shots[c] = required_shots(r.q0_lower, c);
  return r;
}

PreselectResult angle_preselect(const EnergyModel &model,
                                std::span<const double> beta_grid,
                                const SurrogateWeights &w, int depth,
                                std::span<const LpPairWeight> lp,
                                const std::vector<std::vector<double>> *initial) {
  require_onehot(model);
  if (beta_grid.empty()) throw Error(ErrorCode::invalid_argument, "empty beta grid");
  if (!(w.lambda > 0.0)) throw Error(ErrorCode::invalid_argument, "lambda must be > 0");
  if (depth < 1) throw Error(ErrorCode::invalid_argument, "depth must be >= 1");
  const auto &p = model.params();
  for (const auto &f : lp)
    if (f.position < 0 || f.position + 1 >= p.n || f.from < 0 || f.from >= p.S ||
        f.to < 0 || f.to >= p.S)
      throw Error(ErrorCode::invalid_argument, "LP pair feature out of range");

  const auto dim = checked_dimension(model);
  std::vector<double> cost(dim);
  double c_min = 0.0;
  for (std::uint64_t z = 0; z < dim; ++z) {
    cost[z] = model.energy(z);
    c_min = z == 0 ? cost[z] : std::min(c_min, cost[z]);
  }

  PreselectResult res;
  for (std::size_t b = 0; b < beta_grid.size(); ++b) {
    const std::vector<double> betas(depth, beta_grid[b]);
    const auto env = envelope(p, betas, initial);
    const auto W = env.full();
    double mass = 0.0;
    double mu = 0.0;
    double z_shift = 0.0;
    for (std::uint64_t z = 0; z < dim; ++z) {
      mass += W[z];
      mu += W[z] * cost[z];
      z_shift += W[z] * std::exp(-w.lambda * (cost[z] - c_min));
    }
    mu /= mass;
    double var = 0.0;
    for (std::uint64_t z = 0; z < dim; ++z) var += W[z] * (cost[z] - mu) * (cost[z] - mu);
    var /= mass;

    PreselectRow row;
    row.beta = beta_grid[b];
    row.mu = mu;
    row.sigma = std::sqrt(std::max(0.0, var));
    row.log_z = -w.lambda * c_min + std::log(z_shift / mass);
    for (const auto &f : lp)
      row.s_lp += f.weight * env.blocks[f.position][f.from] *
                  env.blocks[f.position + 1][f.to];
    row.score = row.log_z + w.alpha * row.s_lp - w.rho * row.sigma;
    if (b == 0 || row.score > res.rows[res.index].score) res.index = b;
    res.rows.push_back(row);
  }
  res.beta_star = res.rows[res.index].beta;
  return res;
}

AnticoncentrationReport anticoncentration_report(const SampleSet &samples,
                                                 const EnergyModel &model) {
  const auto &p = model.params();
  const auto &costs = model.costs();
  const LoadLimits lim = costs.limits();

  AnticoncentrationReport r;
  r.D = 1;
  for (int j = 0; j < p.n; ++j) r.D *= static_cast<std::uint64_t>(p.S);
  r.baseline = 1.0 / static_cast<double>(r.D);
  if (samples.shots < 1) return r;

  for (const auto &[label, count] : samples.counts) {
    const auto d = label_digits(label, p, model.reg());
    FeasibilityVerdict v;
    if (model.reg() == Register::onehot) {
      v = feasible_global_positions(onehot_from_symbols(d, p).bits, lim);
    } else {
      v = decode_binary_and_check(binary_from_words(d, p), lim);
    }
    if (!v.feasible) continue;
    HistogramRow row;
    row.label = label;
    row.bitstring = label_bits(label, p, model.reg());
    row.count = count;
    row.frequency = static_cast<double>(count) / static_cast<double>(samples.shots);
    row.ratio = row.frequency * static_cast<double>(r.D);
    ++r.feasible_outcomes;
    if (row.frequency > r.baseline) ++r.above_baseline;
    r.histogram.push_back(std::move(row));
  }
  r.share_above_baseline =
      r.feasible_outcomes ? static_cast<double>(r.above_baseline) / r.feasible_outcomes
                          : 0.0;
  std::stable_sort(r.histogram.begin(), r.histogram.end(),
                   [](const HistogramRow &a, const HistogramRow &b) {
                     return a.count > b.count;
                   });
  return r;
}

std::string histogram_csv(const AnticoncentrationReport &r) {
  std::string out = "bitstring,count,frequency,ratio\n";
  for (const auto &h : r.histogram)
    out += h.bitstring + ',' + std::to_string(h.count) + ',' +
           detail::format_double(h.frequency) + ',' + detail::format_double(h.ratio) +
           '\n';
  return out;
}

}  // namespace cpr
