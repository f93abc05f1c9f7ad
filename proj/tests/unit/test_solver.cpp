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


#include <gtest/gtest.h>

#include <limits>
#include <numbers>
#include <random>

#include "cpr/error.hpp"
#include "cpr/solver.hpp"
#include "oracles.hpp"

namespace {

using cpr::EncodingParams;
using cpr::EnergyModel;
using cpr::Register;

constexpr double kPi = std::numbers::pi;

cpr::Instance load(const char *name) { return cpr::load_instance(oracle::data_path(name)); }

struct BruteForce {
  double best = std::numeric_limits<double>::infinity();
  std::set<std::vector<std::pair<int, int>>> argmin;
  std::int64_t feasible = 0;
};

BruteForce scan(const cpr::Instance &inst) {
  BruteForce b;
  for (const auto &seq : oracle::all_sequences(inst.n, inst.K)) {
    if (!oracle::is_permutation_sequence(seq, inst.n) ||
        !oracle::contiguous_within_capacity(seq, inst))
      continue;
    ++b.feasible;
    const double c = oracle::route_cost(inst, seq);
    if (c < b.best - 1e-9) {
      b.best = c;
      b.argmin.clear();
    }
    if (std::abs(c - b.best) <= 1e-9) b.argmin.insert(seq);
  }
  return b;
}

std::set<std::vector<std::pair<int, int>>> as_sequences(const cpr::ExactSolution &s) {
  std::set<std::vector<std::pair<int, int>>> out;
  for (const auto &a : s.optimal_assignments) {
    std::vector<std::pair<int, int>> seq;
    for (const auto &sym : a.slots) seq.emplace_back(sym.customer, sym.vehicle);
    out.insert(seq);
  }
  return out;
}

TEST(Solver, LinspaceAndGrid) {
  const auto v = cpr::linspace(0.0, kPi, 7);
  ASSERT_EQ(v.size(), 7u);
  EXPECT_EQ(v.front(), 0.0);
  EXPECT_EQ(v.back(), kPi);
  EXPECT_NEAR(v[3], kPi / 2, 1e-15);
  const auto g = cpr::GridSpec::uniform(EncodingParams::make(4, 2));
  EXPECT_EQ(g.gammas.size(), 9u);
  EXPECT_EQ(g.size(), 81u);
  EXPECT_EQ(cpr::GridSpec::uniform(EncodingParams::make(4, 2), 3).size(), 9u);
}

TEST(Solver, DefaultShots) {
  EXPECT_EQ(cpr::default_shots(EncodingParams::make(3, 2)), 216);
  EXPECT_EQ(cpr::default_shots(EncodingParams::make(3, 2), cpr::ShotsRule::fifty_cubed), 10800);
  EXPECT_EQ(cpr::default_shots(EncodingParams::make(1, 1)), 1);
  EXPECT_EQ(cpr::default_shots(EncodingParams::make(4, 2)), 512);
}

TEST(Solver, ExactSolveMatchesExhaustiveScan) {
  for (const char *name : {"example_a.json", "example_b.json", "demo3.vrp"}) {
    const auto inst = load(name);
    const auto sol = cpr::exact_solve(cpr::CostTables::of(inst));
    const auto ref = scan(inst);
    EXPECT_NEAR(sol.optimal_cost, ref.best, 1e-9) << name;
    EXPECT_EQ(sol.feasible_count, ref.feasible) << name;
    EXPECT_EQ(as_sequences(sol), ref.argmin) << name;
  }
}

TEST(Solver, ExampleACounts) {
  const auto sol = cpr::exact_solve(cpr::CostTables::of(load("example_a.json")));
  EXPECT_EQ(sol.feasible_count, 36);
}

TEST(Solver, OptimalAssignmentsAreFeasibleAndOptimal) {
  const auto inst = load("example_b.json");
  const auto sol = cpr::exact_solve(cpr::CostTables::of(inst));
  const auto p = EncodingParams::make(inst.n, inst.K);
  ASSERT_FALSE(sol.optimal_assignments.empty());
  for (const auto &a : sol.optimal_assignments) {
    EXPECT_TRUE(cpr::feasible_global_positions(cpr::encode_assignment(a, p), inst).feasible);
    EXPECT_NEAR(cpr::energy_objective(a, inst), sol.optimal_cost, 1e-9);
  }
  const auto labels = sol.optimal_labels(p, Register::onehot);
  EXPECT_TRUE(std::is_sorted(labels.begin(), labels.end()));
}

TEST(Solver, SingleCustomer) {
  cpr::CostTables c;
  c.n = 1;
  c.K = 1;
  c.arc = cpr::Matrix<double>(1, 1);
  c.dep_to = cpr::Matrix<double>(1, 1, 2.5);
  c.to_dep = cpr::Matrix<double>(1, 1, 4.0);
  c.demand = {1};
  c.capacity = {1};
  const auto sol = cpr::exact_solve(c);
  EXPECT_EQ(sol.optimal_cost, 6.5);
  EXPECT_EQ(sol.feasible_count, 1);
}

TEST(Solver, EmptyFeasibleSetAndCeiling) {
  const auto c = cpr::CostTables::of(load("infeasible3.json"));
  const auto sol = cpr::exact_solve(c);
  EXPECT_TRUE(sol.optimal_assignments.empty());
  EXPECT_EQ(sol.feasible_count, 0);
  EXPECT_TRUE(std::isinf(sol.optimal_cost));
  try {
    cpr::exact_solve(c, 2);
    FAIL();
  } catch (const cpr::Error &e) {
    EXPECT_EQ(e.code(), cpr::ErrorCode::ceiling);
  }
}

TEST(Solver, PStarAtZeroAnglesIsUniformMass) {
  const EnergyModel model(load("example_a.json"));
  const auto sol = cpr::exact_solve(model.costs());
  EXPECT_NEAR(cpr::p_star(model, sol, 0.0, 0.0),
              static_cast<double>(sol.optimal_assignments.size()) / 216.0, 1e-14);
  for (double g : cpr::linspace(0.0, kPi, 5))
    for (double b : cpr::linspace(0.0, kPi, 5)) {
      const double ps = cpr::p_star(model, sol, g, b);
      EXPECT_GE(ps, 0.0);
      EXPECT_LE(ps, 1.0 + 1e-12);
    }
}

cpr::PhqcOptions options(const EnergyModel &model, std::uint64_t seed) {
  cpr::PhqcOptions o;
  o.grid = cpr::GridSpec::uniform(model.params());
  o.shots = cpr::default_shots(model.params());
  o.seed = seed;
  return o;
}

TEST(Solver, PhqcGoldenOnDemoInstance) {
  const EnergyModel model(load("demo3.vrp"));
  const auto sol = cpr::exact_solve(model.costs());
  auto o = options(model, 2024);
  o.reference = &sol;
  const auto res = cpr::phqc(model, o);
  ASSERT_TRUE(res.best_score.has_value());
  EXPECT_NEAR(*res.best_score, sol.optimal_cost, 1e-9);
  EXPECT_EQ(res.points.size(), 49u);
  EXPECT_EQ(res.total_shots, 49 * 216);
  EXPECT_EQ(res.filtered_strings, 49 * 216);
  std::int64_t hits = 0;
  for (const auto &pt : res.points) hits += pt.optimal_hits.value_or(0);
  EXPECT_GT(hits, 0);
}

TEST(Solver, PhqcBestIsFeasibleAndIndependentlyScored) {
  const auto inst = load("example_b.json");
  const EnergyModel model(inst);
  auto o = options(model, 5);
  o.grid = {cpr::linspace(0.0, kPi, 3), cpr::linspace(0.0, kPi, 3)};
  o.shots = 64;
  const auto res = cpr::phqc(model, o);
  ASSERT_TRUE(res.best_bitstring.has_value());
  EXPECT_TRUE(cpr::feasible_global_positions(*res.best_bitstring, inst).feasible);
  const auto syms = *res.best_symbols;
  std::vector<std::pair<int, int>> seq;
  for (int s : syms) seq.emplace_back(s % inst.n, s / inst.n);
  EXPECT_NEAR(*res.best_score, oracle::route_cost(inst, seq), 1e-9);
  EXPECT_GE(*res.best_score, cpr::exact_solve(model.costs()).optimal_cost - 1e-9);
  EXPECT_EQ(res.best_point_samples.outcomes[res.best_shot],
            cpr::digits_label(syms, model.params(), Register::onehot));
}

TEST(Solver, PhqcIsDeterministicAcrossWorkerCounts) {
  const EnergyModel model(load("example_a.json"), {}, Register::binary);
  auto o = options(model, 77);
  o.shots = 50;
  const auto a = cpr::phqc(model, o);
  o.jobs = 4;
  const auto b = cpr::phqc(model, o);
  EXPECT_EQ(a.best_score, b.best_score);
  EXPECT_EQ(a.best_point, b.best_point);
  EXPECT_EQ(a.best_shot, b.best_shot);
  EXPECT_EQ(a.best_symbols, b.best_symbols);
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    EXPECT_EQ(a.points[i].feasible_count, b.points[i].feasible_count);
    EXPECT_EQ(a.points[i].best_score, b.points[i].best_score);
  }
  EXPECT_EQ(a.best_point_samples.outcomes, b.best_point_samples.outcomes);
}

TEST(Solver, PhqcFullScoreUsesEnergy) {
  const EnergyModel model(load("example_a.json"));
  auto o = options(model, 3);
  o.score_full = true;
  const auto res = cpr::phqc(model, o);
  ASSERT_TRUE(res.best_symbols.has_value());
  EXPECT_NEAR(*res.best_score,
              model.energy(cpr::digits_label(*res.best_symbols, model.params(), Register::onehot)),
              1e-12);
}

TEST(Solver, PhqcAllInfeasibleGivesNoBest) {
  auto c = cpr::CostTables::of(load("example_a.json"));
  c.capacity = {0, 0};
  const EnergyModel model(c, {});
  auto o = options(model, 1);
  o.grid = {cpr::linspace(0.0, kPi, 2), cpr::linspace(0.0, kPi, 2)};
  o.shots = 100;
  const auto res = cpr::phqc(model, o);
  EXPECT_FALSE(res.best_score.has_value());
  EXPECT_FALSE(res.best_bitstring.has_value());
  for (const auto &pt : res.points) EXPECT_EQ(pt.feasible_count, 0);
}

TEST(Solver, PhqcRejectsEmptyGridAndOversizedRegister) {
  const EnergyModel model(load("example_a.json"));
  auto o = options(model, 1);
  o.grid.betas.clear();
  EXPECT_THROW(cpr::phqc(model, o), cpr::Error);
  auto big = options(model, 1);
  big.budget = 100;
  try {
    cpr::phqc(model, big);
    FAIL();
  } catch (const cpr::Error &e) {
    EXPECT_EQ(e.code(), cpr::ErrorCode::budget);
  }
}

TEST(Solver, PhqcRecoversOptimumWheneverItIsHit) {
  const EnergyModel model(load("example_a.json"));
  const auto sol = cpr::exact_solve(model.costs());
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto o = options(model, seed);
    o.grid = {cpr::linspace(0.0, kPi, 3), cpr::linspace(0.0, kPi, 3)};
    o.shots = 20;
    o.reference = &sol;
    const auto res = cpr::phqc(model, o);
    std::int64_t hits = 0;
    for (const auto &pt : res.points) hits += *pt.optimal_hits;
    if (hits > 0) EXPECT_NEAR(*res.best_score, sol.optimal_cost, 1e-9);
    if (res.best_score) EXPECT_GE(*res.best_score, sol.optimal_cost - 1e-9);
  }
}

}  // namespace
