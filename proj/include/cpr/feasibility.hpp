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
#include <span>
#include <string>
#include <vector>

#include "cpr/encoding.hpp"
#include "cpr/instances.hpp"

namespace cpr {

enum class Reason {
  ok,
  zero_hot,
  multi_hot,
  repeated_customer,
  capacity_violation,
  non_contiguous,
  padding_leak,
};

const char *to_string(Reason r);

struct VehicleSpan {
  int firstpos = -1;
  int lastpos = -1;
  int count = 0;
};

/// Result of the admissibility scan. Detail fields are meaningful only for the
/// reason that fired: `block` for zero/multi-hot and padding leaks, `customer`
/// for repeats, `vehicle` for capacity and contiguity failures.
struct FeasibilityVerdict {
  bool feasible = false;
  Reason reason = Reason::ok;
  int block = -1;
  int customer = -1;
  int vehicle = -1;
  std::int64_t word = -1;
  std::vector<std::int64_t> loads;
  std::vector<VehicleSpan> spans;
  /// Bits inspected by the block scan (for cost accounting).
  std::size_t bits_visited = 0;
};

/// Demand and capacity data consumed by the oracle.
struct LoadLimits {
  int n = 0;
  int K = 0;
  std::span<const std::int64_t> demand;
  std::span<const std::int64_t> capacity;

  static LoadLimits of(const Instance &inst) {
    return {inst.n, inst.K, inst.demand, inst.capacity};
  }
};

/// Decides block one-hotness, customer uniqueness, capacity and per-vehicle
/// contiguity in one O(n^2 K) pass, stopping at the first violation in scan
/// order. Throws CodecError(length) on a size mismatch only.
FeasibilityVerdict feasible_global_positions(std::span<const std::uint8_t> bits,
                                             const LoadLimits &limits);
FeasibilityVerdict feasible_global_positions(const OneHotBits &b,
                                             const Instance &inst);

/// Lifts a compressed sample to one-hot form and runs the oracle. A word
/// value >= S yields a padding_leak verdict.
FeasibilityVerdict decode_binary_and_check(const BinaryBits &y,
                                           const LoadLimits &limits);
FeasibilityVerdict decode_binary_and_check(const BinaryBits &y,
                                           const Instance &inst);

/// One-line human summary, e.g. "CapacityViolation(vehicle 1, load 4 > 3)".
std::string describe(const FeasibilityVerdict &v, const LoadLimits &limits);

}  // namespace cpr
