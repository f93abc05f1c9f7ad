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

#include "cpr/feasibility.hpp"

#include "cpr/error.hpp"

namespace cpr {

const char *to_string(Reason r) {
  switch (r) {
    case Reason::ok: return "OK";
    case Reason::zero_hot: return "ZeroHot";
    case Reason::multi_hot: return "MultiHot";
    case Reason::repeated_customer: return "RepeatedCustomer";
    case Reason::capacity_violation: return "CapacityViolation";
    case Reason::non_contiguous: return "NonContiguous";
    case Reason::padding_leak: return "PaddingLeak";
  }
  return "?";
}

FeasibilityVerdict feasible_global_positions(std::span<const std::uint8_t> bits,
                                             const LoadLimits &lim) {
  const int n = lim.n;
  const int K = lim.K;
  const std::size_t S = static_cast<std::size_t>(n) * K;
  if (bits.size() != S * n)
    throw CodecError(CodecError::Kind::length, -1,
                     static_cast<std::int64_t>(bits.size()),
                     "bitstring length " + std::to_string(bits.size()) +
                         ", expected n^2 K = " + std::to_string(S * n));

  FeasibilityVerdict v;
  v.loads.assign(K, 0);
  v.spans.assign(K, VehicleSpan{});
  std::vector<bool> seen(n, false);

  for (int j = 0; j < n; ++j) {
    const std::size_t base = static_cast<std::size_t>(j) * S;
    int ones = 0;
    int hot = -1;
    for (std::size_t s = 0; s < S; ++s) {
      ++v.bits_visited;
      if (bits[base + s]) {
        ++ones;
        hot = static_cast<int>(s);
        if (ones > 1) {
          v.reason = Reason::multi_hot;
          v.block = j;
          return v;
        }
      }
    }
    if (ones != 1) {
      v.reason = Reason::zero_hot;
      v.block = j;
      return v;
    }
    const int i = hot % n;
    const int k = hot / n;
    if (seen[i]) {
      v.reason = Reason::repeated_customer;
      v.customer = i;
      v.block = j;
      return v;
    }
    seen[i] = true;
    v.loads[k] += lim.demand[i];
    auto &span = v.spans[k];
    ++span.count;
    if (span.firstpos == -1) span.firstpos = j;
    span.lastpos = j;
  }

  for (int k = 0; k < K; ++k) {
    if (v.loads[k] > lim.capacity[k]) {
      v.reason = Reason::capacity_violation;
      v.vehicle = k;
      return v;
    }
    const auto &span = v.spans[k];
    if (span.count > 0 && span.lastpos - span.firstpos + 1 != span.count) {
      v.reason = Reason::non_contiguous;
      v.vehicle = k;
      return v;
    }
  }
  v.feasible = true;
  v.reason = Reason::ok;
  return v;
}

FeasibilityVerdict feasible_global_positions(const OneHotBits &b,
                                             const Instance &inst) {
  return feasible_global_positions(b.bits, LoadLimits::of(inst));
}

FeasibilityVerdict decode_binary_and_check(const BinaryBits &y,
                                           const LoadLimits &lim) {
  const EncodingParams p = EncodingParams::make(lim.n, lim.K);
  const auto words = binary_words(y, p);  // throws on length mismatch
  for (int j = 0; j < p.n; ++j) {
    if (words[j] >= p.S) {
      FeasibilityVerdict v;
      v.reason = Reason::padding_leak;
      v.block = j;
      v.word = words[j];
      return v;
    }
  }
  const OneHotBits x = onehot_from_symbols(words, p);
  return feasible_global_positions(x.bits, lim);
}

FeasibilityVerdict decode_binary_and_check(const BinaryBits &y,
                                           const Instance &inst) {
  return decode_binary_and_check(y, LoadLimits::of(inst));
}

std::string describe(const FeasibilityVerdict &v, const LoadLimits &lim) {
  const auto s = [](auto x) { return std::to_string(x); };
  switch (v.reason) {
    case Reason::ok:
      return "OK";
    case Reason::zero_hot:
    case Reason::multi_hot:
      return std::string(to_string(v.reason)) + "(block " + s(v.block + 1) + ")";
    case Reason::repeated_customer:
      return "RepeatedCustomer(customer " + s(v.customer + 1) + ")";
    case Reason::capacity_violation:
      return "CapacityViolation(vehicle " + s(v.vehicle + 1) + ", load " +
             s(v.loads[v.vehicle]) + " > " + s(lim.capacity[v.vehicle]) + ")";
    case Reason::non_contiguous: {
      const auto &sp = v.spans[v.vehicle];
      return "NonContiguous(vehicle " + s(v.vehicle + 1) + ", first " +
             s(sp.firstpos + 1) + ", last " + s(sp.lastpos + 1) + ", count " +
             s(sp.count) + ")";
    }
    case Reason::padding_leak:
      return "PaddingLeak(block " + s(v.block + 1) + ", word " + s(v.word) + ")";
  }
  return "?";
}

}  // namespace cpr
