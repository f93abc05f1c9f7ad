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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpr/matrix.hpp"

namespace cpr {

enum class Rounding { exact, nearest };

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Capacitated routing instance: n customers, K vehicles, a customer-customer
/// distance matrix and depot legs.
///
/// Depot legs are stored per vehicle (n x K). Instances built from a single
/// shared depot simply repeat the same column K times.
struct Instance {
  std::string name;
  int n = 0;
  int K = 0;
  std::optional<std::vector<Point>> coords;
  std::optional<Point> depot;
  std::vector<std::int64_t> demand;    // length n
  std::vector<std::int64_t> capacity;  // length K
  Matrix<double> W;                    // n x n, zero diagonal
  Matrix<double> dep_to;               // n x K, w(dep_k -> i)
  Matrix<double> to_dep;               // n x K, w(i -> dep_k)
  Rounding rounding = Rounding::exact;

  double arc(int i, int j) const { return W(i, j); }
  double leg_from_depot(int i, int k) const { return dep_to(i, k); }
  double leg_to_depot(int i, int k) const { return to_dep(i, k); }

  /// True when every vehicle shares the same depot legs.
  bool single_depot() const;

  /// Throws Error(invalid_argument) when an invariant is broken.
  void validate() const;
};

/// Pickup-and-delivery instance over T atomic tours. The inter-tour matrix may
/// be asymmetric and its diagonal need not vanish.
struct PdpInstance {
  std::string name;
  int T = 0;
  int K = 0;
  std::vector<std::int64_t> weight;    // length T, zero allowed
  std::vector<std::int64_t> capacity;  // length K
  Matrix<double> Wtilde;               // T x T
  Matrix<double> dep_to;               // T x K
  Matrix<double> to_dep;               // T x K

  void validate() const;
};

struct DistanceTables {
  Matrix<double> W;
  std::vector<double> dep_to;
  std::vector<double> to_dep;
};

DistanceTables build_matrices(std::span<const Point> coords, Point depot,
                              Rounding rounding);

/// Parses a TSPLIB-style CVRP file. Node 1 is the depot unless DEPOT_SECTION
/// names another node; every other node becomes a customer in id order.
Instance parse_vrp(std::string_view text, int K = 2,
                   Rounding rounding = Rounding::exact);

/// Builds an instance from an explicit-matrix JSON record:
/// {"name", "K", "W", "dep_to", "to_dep", "demands", "capacities"}.
/// dep_to/to_dep may be length-n vectors (shared depot) or n x K arrays.
/// "capacities" may be a scalar (shared by all K vehicles).
Instance instance_from_json(std::string_view text);

/// {"name", "K", "Wtilde", "dep_to", "to_dep", "weights", "capacities"}.
PdpInstance pdp_from_json(std::string_view text);

/// Loads either format, picking JSON when the first non-blank char is '{'.
Instance load_instance(const std::string &path, int K = 2,
                       Rounding rounding = Rounding::exact);

/// (one-hot qubits K n^2, binary qubits n ceil(log2(nK))).
std::pair<std::int64_t, std::int64_t> qubit_counts(int n, int K);

/// ceil(log2(x)) for x >= 1, with ceil(log2(1)) = 0.
int ceil_log2(std::int64_t x);

}  // namespace cpr
