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

#include "cpr/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <thread>

#include "cpr/error.hpp"
#include "cpr/feasibility.hpp"

namespace cpr {
namespace {

bool same_cost(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
}

// Vehicle label sequences whose equal-label positions form single runs.
void contiguous_labelings(int n, int K, std::vector<int> &cur,
                          std::vector<char> &used,
                          std::vector<std::vector<int>> &out) {
  const int j = static_cast<int>(cur.size());
  if (j == n) {
    out.push_back(cur);
    return;
  }
  if (j > 0) {
    cur.push_back(cur.back());
    contiguous_labelings(n, K, cur, used, out);
    cur.pop_back();
  }
  for (int k = 0; k < K; ++k) {
    if (used[k]) continue;
    used[k] = 1;
    cur.push_back(k);
    contiguous_labelings(n, K, cur, used, out);
    cur.pop_back();
    used[k] = 0;
  }
}

struct PointOutcome {
  PointRecord record;
  std::optional<double> best;
  std::int64_t best_shot = 0;
  std::uint64_t best_label = 0;
  SampleSet samples;
};

}  // namespace

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 1) throw Error(ErrorCode::invalid_argument, "linspace needs >= 1 point");
  std::vector<double> v(points);
  if (points == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < points; ++i)
    v[i] = i == points - 1 ? hi : lo + (hi - lo) * i / (points - 1);
  return v;
}

GridSpec GridSpec::uniform(const EncodingParams &p, std::optional<int> points) {
  const int m = points.value_or(p.S + 1);
  return {linspace(0.0, std::numbers::pi, m), linspace(0.0, std::numbers::pi, m)};
}

const char *to_string(ShotsRule r) {
  return r == ShotsRule::cubed ? "cubed" : "fifty-cubed";
}

std::int64_t default_shots(const EncodingParams &p, ShotsRule rule) {
  const std::int64_t s = p.S;
  const std::int64_t cubed = s * s * s;
  return rule == ShotsRule::cubed ? cubed : 50 * cubed;
}

double route_cost(const CostTables &c, std::span<const int> symbols) {
  const int n = static_cast<int>(symbols.size());
  if (n == 0) return 0.0;
  const Symbol first = symbol_at(symbols[0], c.n);
  const Symbol last = symbol_at(symbols[n - 1], c.n);
  double total = c.dep_to(first.customer, first.vehicle);
  for (int j = 0; j + 1 < n; ++j)
    total += edge_cost(c, symbol_at(symbols[j], c.n), symbol_at(symbols[j + 1], c.n));
  return total + c.to_dep(last.customer, last.vehicle);
}

std::vector<std::uint64_t> ExactSolution::optimal_labels(const EncodingParams &p,
                                                         Register reg) const {
  std::vector<std::uint64_t> out;
  std::vector<int> d(p.n);
  for (const auto &a : optimal_assignments) {
    for (int j = 0; j < p.n; ++j) d[j] = symbol_index(a.slots[j], p.n);
    out.push_back(digits_label(d, p, reg));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExactSolution exact_solve(const CostTables &costs, int ceiling) {
  const int n = costs.n;
  const int K = costs.K;
  if (n > ceiling)
    throw Error(ErrorCode::ceiling, "n = " + std::to_string(n) +
                                        " exceeds the enumeration ceiling " +
                                        std::to_string(ceiling));
  std::vector<std::vector<int>> labelings;
  {
    std::vector<int> cur;
    std::vector<char> used(K, 0);
    contiguous_labelings(n, K, cur, used, labelings);
  }

  ExactSolution sol;
  sol.optimal_cost = std::numeric_limits<double>::infinity();
  std::vector<std::vector<int>> best;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> symbols(n);
  std::vector<std::int64_t> loads(K);
  do {
    for (const auto &lab : labelings) {
      std::fill(loads.begin(), loads.end(), 0);
      for (int j = 0; j < n; ++j) loads[lab[j]] += costs.demand[order[j]];
      bool ok = true;
      for (int k = 0; k < K && ok; ++k) ok = loads[k] <= costs.capacity[k];
      if (!ok) continue;
      ++sol.feasible_count;
      for (int j = 0; j < n; ++j) symbols[j] = order[j] + n * lab[j];
      const double c = route_cost(costs, symbols);
      if (best.empty() || (c < sol.optimal_cost && !same_cost(c, sol.optimal_cost))) {
        sol.optimal_cost = c;
        best.assign(1, symbols);
      } else if (same_cost(c, sol.optimal_cost)) {
        best.push_back(symbols);
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));

  std::sort(best.begin(), best.end());
  for (const auto &s : best) {
    ColoredAssignment a;
    for (int x : s) a.slots.push_back(symbol_at(x, n));
    sol.optimal_assignments.push_back(std::move(a));
  }
  return sol;
}

PhqcResult phqc(const EnergyModel &model, const PhqcOptions &opts) {
  if (opts.grid.gammas.empty() || opts.grid.betas.empty())
    throw Error(ErrorCode::invalid_argument, "parameter grid is empty");
  if (opts.shots < 1) throw Error(ErrorCode::invalid_argument, "shots must be >= 1");
  if (opts.depth < 1) throw Error(ErrorCode::invalid_argument, "depth must be >= 1");
  const auto &p = model.params();
  const Register reg = model.reg();
  const auto dim = register_dimension(p, reg);
  if (!dim || *dim > opts.budget)
    throw Error(ErrorCode::budget, "register dimension exceeds the amplitude budget of " +
                                       std::to_string(opts.budget));

  const EnergyTable table(model);
  const LoadLimits lim = model.costs().limits();
  std::vector<std::uint64_t> optimal;
  if (opts.reference) optimal = opts.reference->optimal_labels(p, reg);

  const std::size_t G = opts.grid.size();
  const std::size_t nb = opts.grid.betas.size();
  std::vector<PointOutcome> outcomes(G);

  auto run_point = [&](std::size_t idx) {
    PointOutcome &out = outcomes[idx];
    PointRecord &rec = out.record;
    rec.index = idx;
    rec.gamma = opts.grid.gammas[idx / nb];
    rec.beta = opts.grid.betas[idx % nb];
    const auto st =
        run_ansatz(table, Schedule::constant(rec.gamma, rec.beta, opts.depth), opts.budget);
    const auto probs = probabilities(st);
    out.samples = sample(probs, opts.shots, derive_seed(opts.seed, idx));
    if (opts.reference) {
      double mass = 0.0;
      for (auto z : optimal) mass += probs[z];
      rec.p_star_exact = mass;
      rec.optimal_hits = 0;
    }

    std::map<std::uint64_t, std::optional<double>> cache;
    for (std::int64_t s = 0; s < out.samples.shots; ++s) {
      const std::uint64_t label = out.samples.outcomes[s];
      auto it = cache.find(label);
      if (it == cache.end()) {
        const auto d = label_digits(label, p, reg);
        const FeasibilityVerdict v =
            reg == Register::onehot
                ? feasible_global_positions(onehot_from_symbols(d, p).bits, lim)
                : decode_binary_and_check(binary_from_words(d, p), lim);
        std::optional<double> score;
        if (v.feasible)
          score = opts.score_full ? table(label) : route_cost(model.costs(), d);
        it = cache.emplace(label, score).first;
      }
      if (!it->second) continue;
      const double e = *it->second;
      ++rec.feasible_count;
      if (opts.reference && same_cost(e, opts.reference->optimal_cost) &&
          std::binary_search(optimal.begin(), optimal.end(), label))
        ++*rec.optimal_hits;
      if (!out.best || e < *out.best) {
        out.best = e;
        out.best_shot = s;
        out.best_label = label;
      }
    }
    rec.best_score = out.best;
    rec.share_above_baseline =
        anticoncentration_report(out.samples, model).share_above_baseline;
  };

  const int jobs = static_cast<int>(
      std::clamp<std::size_t>(opts.jobs < 1 ? 1 : opts.jobs, 1, G));
  if (jobs == 1) {
    for (std::size_t i = 0; i < G; ++i) run_point(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < G;) {
          try {
            run_point(i);
          } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    for (auto &t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  PhqcResult res;
  res.total_shots = static_cast<std::int64_t>(G) * opts.shots;
  res.filtered_strings = res.total_shots;
  for (std::size_t i = 0; i < G; ++i) {
    const auto &o = outcomes[i];
    if (o.best && (!res.best_score || *o.best < *res.best_score)) {
      res.best_score = o.best;
      res.best_point = i;
      res.best_shot = o.best_shot;
      res.best_symbols = label_digits(o.best_label, p, reg);
    }
    res.points.push_back(o.record);
  }
  if (res.best_symbols) res.best_bitstring = onehot_from_symbols(*res.best_symbols, p);
  res.best_point_samples = std::move(outcomes[res.best_point].samples);
  return res;
}

double p_star(const EnergyModel &model, const ExactSolution &exact, double gamma,
              double beta, int depth, std::uint64_t budget) {
  const auto st = run_ansatz(model, Schedule::constant(gamma, beta, depth), budget);
  double mass = 0.0;
  for (auto z : exact.optimal_labels(model.params(), model.reg()))
    mass += std::norm(st.amplitudes[z]);
  return mass;
}

}  // namespace cpr
