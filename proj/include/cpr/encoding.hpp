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
#include <string>
#include <string_view>
#include <vector>

#include "cpr/matrix.hpp"

namespace cpr {

/// Register geometry for n global positions over the alphabet of (customer,
/// vehicle) symbols. Each position is one block of S = nK one-hot bits, or
/// q = ceil(log2 S) bits in the compressed register.
struct EncodingParams {
  int n = 0;
  int K = 0;
  int S = 0;
  int q = 0;

  static EncodingParams make(int n, int K);

  std::size_t onehot_length() const { return static_cast<std::size_t>(n) * S; }
  std::size_t binary_length() const { return static_cast<std::size_t>(n) * q; }
  std::int64_t word_count() const { return std::int64_t{1} << q; }
};

struct Symbol {
  int customer = 0;  // 0-based
  int vehicle = 0;   // 0-based

  bool operator==(const Symbol &) const = default;
};

/// s = i + n k.
int symbol_index(int customer, int vehicle, int n);
int symbol_index(Symbol sym, int n);
Symbol symbol_at(int s, int n);

/// One (customer, vehicle) symbol per global position.
struct ColoredAssignment {
  std::vector<Symbol> slots;

  bool operator==(const ColoredAssignment &) const = default;

  /// Human-facing form, e.g. "(1,1) (2,2) (3,2)" with 1-based indices.
  std::string to_string() const;
  /// Parses the 1-based form produced by to_string().
  static ColoredAssignment parse(std::string_view text);
};

/// Position-major block one-hot bits: block j holds bits [jS, (j+1)S).
struct OneHotBits {
  std::vector<std::uint8_t> bits;
  bool operator==(const OneHotBits &) const = default;
};

/// Position-major q-bit words, MSB first inside each word.
struct BinaryBits {
  std::vector<std::uint8_t> bits;
  bool operator==(const BinaryBits &) const = default;
};

/// Parses '0'/'1' text. Spaces are ignored so grouped renderings round-trip.
std::vector<std::uint8_t> parse_bits(std::string_view text);
std::string render_bits(const std::vector<std::uint8_t> &bits,
                        std::size_t group = 0);

OneHotBits encode_assignment(const ColoredAssignment &a, const EncodingParams &p);

/// Throws CodecError(zero_hot | multi_hot) naming the first bad block.
ColoredAssignment decode_bitstring(const OneHotBits &b, const EncodingParams &p);

/// P(i, j) = sum_k X(i, j, k) with customers as rows and positions as
/// columns; slices[k] is the customer x position layer of vehicle k.
struct PermutationView {
  Matrix<int> P;
  std::vector<Matrix<int>> slices;
};

/// Throws CodecError(not_once_each) when a customer repeats or is missing.
PermutationView permutation_view(const ColoredAssignment &a, int n, int K);

/// Throws CodecError(zero_hot | multi_hot) when a block is not one-hot.
BinaryBits compress(const OneHotBits &b, const EncodingParams &p);

/// Throws CodecError(padding_leak) when a word decodes to a value >= S.
OneHotBits decompress(const BinaryBits &y, const EncodingParams &p);

/// Per-block symbol values, validating one-hotness.
std::vector<int> onehot_symbols(const OneHotBits &b, const EncodingParams &p);
/// Per-block word values; no range check against S.
std::vector<int> binary_words(const BinaryBits &y, const EncodingParams &p);

OneHotBits onehot_from_symbols(const std::vector<int> &symbols,
                               const EncodingParams &p);
BinaryBits binary_from_words(const std::vector<int> &words,
                             const EncodingParams &p);

}  // namespace cpr
