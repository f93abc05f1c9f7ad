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

#include "cpr/hamiltonian.hpp"

#include <algorithm>
#include <limits>

#include "cpr/error.hpp"

namespace cpr {
namespace {

bool uniform(std::span<const std::int64_t> q) {
  return std::adjacent_find(q.begin(), q.end(), std::not_equal_to<>()) == q.end();
}

double timeline_objective(const CostTables &c, std::span<const int> digits,
                          int S) {
  const int n = static_cast<int>(digits.size());
  auto valid = [&](int j) { return digits[j] >= 0 && digits[j] < S; };
  double total = 0.0;
  if (valid(0)) {
    const Symbol s = symbol_at(digits[0], c.n);
    total += c.dep_to(s.customer, s.vehicle);
  }
  for (int j = 0; j + 1 < n; ++j)
    if (valid(j) && valid(j + 1))
      total += edge_cost(c, symbol_at(digits[j], c.n), symbol_at(digits[j + 1], c.n));
  if (valid(n - 1)) {
    const Symbol s = symbol_at(digits[n - 1], c.n);
    total += c.to_dep(s.customer, s.vehicle);
  }
  return total;
}

std::vector<int> symbols_of(const ColoredAssignment &a, int n) {
  std::vector<int> out;
  out.reserve(a.slots.size());
  for (const auto &s : a.slots) out.push_back(symbol_index(s, n));
  return out;
}

}  // namespace

const char *to_string(CapMode m) {
  switch (m) {
    case CapMode::hinge: return "hinge";
    case CapMode::quadratic_surrogate: return "quadratic-surrogate";
    case CapMode::filter_only: return "filter-only";
  }
  return "?";
}

const char *to_string(Register r) {
  return r == Register::onehot ? "onehot" : "binary";
}

void PenaltyWeights::validate() const {
  for (double w : {once, cap, obj, pad})
    if (!(w >= 0.0))
      throw Error(ErrorCode::config, "penalty weights must be nonnegative");
}

CostTables CostTables::of(const Instance &inst) {
  inst.validate();
  return {inst.n, inst.K, inst.W, inst.dep_to, inst.to_dep, inst.demand,
          inst.capacity};
}

CostTables CostTables::of(const PdpInstance &pdp) {
  pdp.validate();
  return {pdp.T, pdp.K, pdp.Wtilde, pdp.dep_to, pdp.to_dep, pdp.weight,
          pdp.capacity};
}

double edge_cost(const CostTables &c, Symbol from, Symbol to) {
  if (from.vehicle == to.vehicle) return c.arc(from.customer, to.customer);
  return c.to_dep(from.customer, from.vehicle) + c.dep_to(to.customer, to.vehicle);
}

double energy_once(std::span<const int> counts, double lam) {
  double sum = 0.0;
  for (int c : counts) sum += static_cast<double>(c - 1) * (c - 1);
  return lam * sum;
}

double energy_capacity(std::span<const std::int64_t> loads,
                       std::span<const std::int64_t> capacity,
                       const PenaltyWeights &w) {
  if (loads.size() != capacity.size())
    throw Error(ErrorCode::invalid_argument, "loads and capacities differ in length");
  double sum = 0.0;
  switch (w.cap_mode) {
    case CapMode::filter_only:
      return 0.0;
    case CapMode::hinge:
      for (std::size_t k = 0; k < loads.size(); ++k) {
        const auto over = std::max<std::int64_t>(0, loads[k] - capacity[k]);
        sum += static_cast<double>(over) * static_cast<double>(over);
      }
      return w.cap * sum;
    case CapMode::quadratic_surrogate:
      if (!uniform(capacity))
        throw Error(ErrorCode::config,
                    "quadratic-surrogate capacity mode needs uniform capacities");
      for (std::size_t k = 0; k < loads.size(); ++k) {
        const double dev = static_cast<double>(loads[k] - capacity[k]);
        sum += dev * dev;
      }
      return w.cap * sum;
  }
  return 0.0;
}

double energy_objective(const ColoredAssignment &a, const CostTables &c,
                        double lam_obj) {
  if (static_cast<int>(a.slots.size()) != c.n)
    throw Error(ErrorCode::invalid_argument, "assignment length != n");
  for (const auto &s : a.slots)
    if (s.vehicle < 0 || s.vehicle >= c.K)
      throw Error(ErrorCode::invalid_argument, "vehicle index out of range");
  const auto sym = symbols_of(a, c.n);
  return lam_obj * timeline_objective(c, sym, c.n * c.K);
}

double energy_objective(const ColoredAssignment &a, const Instance &inst,
                        double lam_obj) {
  return energy_objective(a, CostTables::of(inst), lam_obj);
}

double energy_objective_pdp(const ColoredAssignment &a, const PdpInstance &pdp,
                            double lam_obj) {
  return energy_objective(a, CostTables::of(pdp), lam_obj);
}

EnergyModel::EnergyModel(CostTables costs, PenaltyWeights weights, Register reg)
    : costs_(std::move(costs)),
      weights_(weights),
      params_(EncodingParams::make(costs_.n, costs_.K)),
      reg_(reg) {
  weights_.validate();
  if (weights_.cap_mode == CapMode::quadratic_surrogate && !uniform(costs_.capacity))
    throw Error(ErrorCode::config,
                "quadratic-surrogate capacity mode needs uniform capacities");
  base_ = reg_ == Register::onehot ? params_.S : params_.word_count();
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  dimension_ = 1;
  for (int j = 0; j < params_.n; ++j) {
    if (dimension_ > kMax / static_cast<std::uint64_t>(base_)) {
      dimension_ = kMax;
      break;
    }
    dimension_ *= static_cast<std::uint64_t>(base_);
  }
}

EnergyModel::EnergyModel(const Instance &inst, PenaltyWeights weights, Register reg)
    : EnergyModel(CostTables::of(inst), weights, reg) {}

void EnergyModel::digits(std::uint64_t label, std::span<int> out) const {
  const auto b = static_cast<std::uint64_t>(base_);
  for (int j = params_.n - 1; j >= 0; --j) {
    out[j] = static_cast<int>(label % b);
    label /= b;
  }
}

std::vector<int> EnergyModel::digits(std::uint64_t label) const {
  std::vector<int> d(params_.n);
  digits(label, d);
  return d;
}

std::uint64_t EnergyModel::label_of(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) != params_.n)
    throw Error(ErrorCode::invalid_argument, "digit count != n");
  std::uint64_t label = 0;
  for (int d : digits) {
    if (d < 0 || d >= base_)
      throw Error(ErrorCode::invalid_argument, "digit out of range");
    label = label * static_cast<std::uint64_t>(base_) + static_cast<std::uint64_t>(d);
  }
  return label;
}

EnergyTerms EnergyModel::terms(std::span<const int> digits) const {
  const int n = params_.n;
  const int S = params_.S;
  constexpr int kStack = 64;
  int counts_buf[kStack];
  std::int64_t loads_buf[kStack];
  std::vector<int> counts_heap;
  std::vector<std::int64_t> loads_heap;
  std::span<int> counts;
  std::span<std::int64_t> loads;
  if (n <= kStack && costs_.K <= kStack) {
    counts = std::span<int>(counts_buf, n);
    loads = std::span<std::int64_t>(loads_buf, costs_.K);
  } else {
    counts_heap.assign(n, 0);
    loads_heap.assign(costs_.K, 0);
    counts = counts_heap;
    loads = loads_heap;
  }
  std::fill(counts.begin(), counts.end(), 0);
  std::fill(loads.begin(), loads.end(), 0);

  EnergyTerms t;
  int padded = 0;
  for (int j = 0; j < n; ++j) {
    const int s = digits[j];
    if (s >= S) {
      ++padded;
      continue;
    }
    const int i = s % n;
    ++counts[i];
    loads[s / n] += costs_.demand[i];
  }
  t.once = energy_once(counts, weights_.once);
  t.cap = energy_capacity(loads, costs_.capacity, weights_);
  t.obj = weights_.obj * timeline_objective(costs_, digits, S);
  t.pad = weights_.pad * padded;
  return t;
}

EnergyTerms EnergyModel::terms(std::uint64_t label) const {
  std::vector<int> d(params_.n);
  digits(label, d);
  return terms(d);
}

double EnergyModel::energy(std::uint64_t label) const {
  constexpr int kStack = 64;
  if (params_.n <= kStack) {
    int buf[kStack];
    std::span<int> d(buf, params_.n);
    digits(label, d);
    return terms(std::span<const int>(d)).total();
  }
  return terms(label).total();
}

double EnergyModel::objective(std::span<const int> symbols) const {
  return weights_.obj * timeline_objective(costs_, symbols, params_.S);
}

double QuboExport::evaluate(std::span<const std::uint8_t> x) const {
  if (x.size() != num_variables)
    throw Error(ErrorCode::invalid_argument, "QUBO assignment has wrong length");
  double v = constant;
  for (const auto &[i, c] : linear)
    if (x[i]) v += c;
  for (const auto &[ij, c] : quadratic)
    if (x[ij.first] && x[ij.second]) v += c;
  return v;
}

QuboExport export_qubo(const EnergyModel &model) {
  const auto &w = model.weights();
  if (w.cap_mode == CapMode::hinge)
    throw Error(ErrorCode::unsupported,
                "the hinge capacity penalty is not quadratic; use "
                "quadratic-surrogate or filter-only for QUBO export");
  const auto &c = model.costs();
  const auto &p = model.params();
  const int n = p.n;
  const int S = p.S;

  QuboExport q;
  q.num_variables = p.onehot_length();
  auto var = [&](int j, int s) { return static_cast<std::size_t>(j) * S + s; };
  auto add_lin = [&](std::size_t v, double coef) { q.linear[v] += coef; };
  auto add_quad = [&](std::size_t a, std::size_t b, double coef) {
    if (a == b) {
      add_lin(a, coef);  // x^2 = x on binary variables
      return;
    }
    q.quadratic[{std::min(a, b), std::max(a, b)}] += coef;
  };

  // Once: lam * sum_i (sum_{v in V_i} x_v - 1)^2.
  for (int i = 0; i < n; ++i) {
    std::vector<std::size_t> vars;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < p.K; ++k) vars.push_back(var(j, i + n * k));
    for (std::size_t a = 0; a < vars.size(); ++a) {
      add_lin(vars[a], -w.once);
      for (std::size_t b = a + 1; b < vars.size(); ++b)
        add_quad(vars[a], vars[b], 2.0 * w.once);
    }
    q.constant += w.once;
  }

  // Surrogate capacity: lam * sum_k (sum_v d_v x_v - Q)^2.
  if (w.cap_mode == CapMode::quadratic_surrogate) {
    for (int k = 0; k < p.K; ++k) {
      const double Q = static_cast<double>(c.capacity[k]);
      std::vector<std::pair<std::size_t, double>> vars;
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
          vars.emplace_back(var(j, i + n * k), static_cast<double>(c.demand[i]));
      for (std::size_t a = 0; a < vars.size(); ++a) {
        const double da = vars[a].second;
        add_lin(vars[a].first, w.cap * (da * da - 2.0 * Q * da));
        for (std::size_t b = a + 1; b < vars.size(); ++b)
          add_quad(vars[a].first, vars[b].first, 2.0 * w.cap * da * vars[b].second);
      }
      q.constant += w.cap * Q * Q;
    }
  }

  // Objective: depot legs on the first/last blocks plus adjacent-block edges.
  for (int s = 0; s < S; ++s) {
    const Symbol sym = symbol_at(s, n);
    add_lin(var(0, s), w.obj * c.dep_to(sym.customer, sym.vehicle));
    add_lin(var(n - 1, s), w.obj * c.to_dep(sym.customer, sym.vehicle));
  }
  for (int j = 0; j + 1 < n; ++j)
    for (int s = 0; s < S; ++s)
      for (int t = 0; t < S; ++t)
        add_quad(var(j, s), var(j + 1, t),
                 w.obj * edge_cost(c, symbol_at(s, n), symbol_at(t, n)));

  std::erase_if(q.linear, [](const auto &kv) { return kv.second == 0.0; });
  std::erase_if(q.quadratic, [](const auto &kv) { return kv.second == 0.0; });
  return q;
}

}  // namespace cpr
