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

#include "cpr/encoding.hpp"

#include <cctype>
#include <charconv>

#include "cpr/error.hpp"
#include "cpr/instances.hpp"

namespace cpr {
namespace {

void require_length(std::size_t got, std::size_t want, const char *what) {
  if (got != want)
    throw CodecError(CodecError::Kind::length, -1, static_cast<std::int64_t>(got),
                     std::string(what) + ": length " + std::to_string(got) +
                         ", expected " + std::to_string(want));
}

}  // namespace

EncodingParams EncodingParams::make(int n, int K) {
  if (n < 1 || K < 1)
    throw Error(ErrorCode::invalid_argument, "encoding needs n, K >= 1");
  EncodingParams p;
  p.n = n;
  p.K = K;
  p.S = n * K;
  p.q = ceil_log2(p.S);
  return p;
}

int symbol_index(int customer, int vehicle, int n) {
  if (n < 1 || customer < 0 || customer >= n || vehicle < 0)
    throw Error(ErrorCode::invalid_argument,
                "symbol index out of range: (" + std::to_string(customer) + "," +
                    std::to_string(vehicle) + ") with n=" + std::to_string(n));
  return customer + n * vehicle;
}

int symbol_index(Symbol sym, int n) {
  return symbol_index(sym.customer, sym.vehicle, n);
}

Symbol symbol_at(int s, int n) {
  if (s < 0 || n < 1)
    throw Error(ErrorCode::invalid_argument, "negative symbol index");
  return {s % n, s / n};
}

std::string ColoredAssignment::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < slots.size(); ++j) {
    if (j) out += ' ';
    out += '(' + std::to_string(slots[j].customer + 1) + ',' +
           std::to_string(slots[j].vehicle + 1) + ')';
  }
  return out;
}

ColoredAssignment ColoredAssignment::parse(std::string_view text) {
  ColoredAssignment a;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  auto number = [&]() -> int {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc())
      throw Error(ErrorCode::parse, "assignment: expected an integer");
    i = static_cast<std::size_t>(ptr - text.data());
    return v;
  };
  auto expect = [&](char c) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] != c)
      throw Error(ErrorCode::parse, std::string("assignment: expected '") + c + "'");
    ++i;
  };
  skip();
  while (i < text.size()) {
    expect('(');
    const int c = number();
    expect(',');
    const int v = number();
    expect(')');
    if (c < 1 || v < 1)
      throw Error(ErrorCode::parse, "assignment indices are 1-based");
    a.slots.push_back({c - 1, v - 1});
    skip();
  }
  return a;
}

std::vector<std::uint8_t> parse_bits(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::parse,
                  std::string("bitstring contains invalid character '") + c + "'");
    }
  }
  return bits;
}

std::string render_bits(const std::vector<std::uint8_t> &bits, std::size_t group) {
  std::string out;
  out.reserve(bits.size() + (group ? bits.size() / group : 0));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (group && i && i % group == 0) out += ' ';
    out += bits[i] ? '1' : '0';
  }
  return out;
}

OneHotBits encode_assignment(const ColoredAssignment &a, const EncodingParams &p) {
  if (static_cast<int>(a.slots.size()) != p.n)
    throw Error(ErrorCode::invalid_argument,
                "assignment has " + std::to_string(a.slots.size()) +
                    " positions, expected " + std::to_string(p.n));
  OneHotBits b{std::vector<std::uint8_t>(p.onehot_length(), 0)};
  for (int j = 0; j < p.n; ++j) {
    const Symbol sym = a.slots[j];
    if (sym.vehicle >= p.K)
      throw Error(ErrorCode::invalid_argument, "vehicle index out of range");
    b.bits[static_cast<std::size_t>(j) * p.S + symbol_index(sym, p.n)] = 1;
  }
  return b;
}

std::vector<int> onehot_symbols(const OneHotBits &b, const EncodingParams &p) {
  require_length(b.bits.size(), p.onehot_length(), "one-hot bitstring");
  std::vector<int> symbols(p.n);
  for (int j = 0; j < p.n; ++j) {
    const std::size_t base = static_cast<std::size_t>(j) * p.S;
    int ones = 0;
    int hot = -1;
    for (int s = 0; s < p.S; ++s) {
      if (b.bits[base + s]) {
        ++ones;
        hot = s;
      }
    }
    if (ones == 0)
      throw CodecError(CodecError::Kind::zero_hot, j, 0,
                       "block " + std::to_string(j) + " has no set bit");
    if (ones > 1)
      throw CodecError(CodecError::Kind::multi_hot, j, ones,
                       "block " + std::to_string(j) + " has " +
                           std::to_string(ones) + " set bits");
    symbols[j] = hot;
  }
  return symbols;
}

ColoredAssignment decode_bitstring(const OneHotBits &b, const EncodingParams &p) {
  ColoredAssignment a;
  for (int s : onehot_symbols(b, p)) a.slots.push_back(symbol_at(s, p.n));
  return a;
}

PermutationView permutation_view(const ColoredAssignment &a, int n, int K) {
  if (static_cast<int>(a.slots.size()) != n)
    throw Error(ErrorCode::invalid_argument, "assignment length != n");
  PermutationView v{Matrix<int>(n, n), {}};
  v.slices.assign(K, Matrix<int>(n, n));
  std::vector<int> seen(n, 0);
  for (int j = 0; j < n; ++j) {
    const Symbol s = a.slots[j];
    if (s.customer < 0 || s.customer >= n || s.vehicle < 0 || s.vehicle >= K)
      throw Error(ErrorCode::invalid_argument, "symbol out of range");
    if (seen[s.customer]++)
      throw CodecError(CodecError::Kind::not_once_each, j, s.customer,
                       "customer " + std::to_string(s.customer + 1) +
                           " appears more than once");
    v.slices[s.vehicle](s.customer, j) = 1;
    v.P(s.customer, j) += 1;
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i])
      throw CodecError(CodecError::Kind::not_once_each, -1, i,
                       "customer " + std::to_string(i + 1) + " is never visited");
  return v;
}

BinaryBits compress(const OneHotBits &b, const EncodingParams &p) {
  return binary_from_words(onehot_symbols(b, p), p);
}

std::vector<int> binary_words(const BinaryBits &y, const EncodingParams &p) {
  require_length(y.bits.size(), p.binary_length(), "binary bitstring");
  std::vector<int> words(p.n, 0);
  for (int j = 0; j < p.n; ++j) {
    int v = 0;
    for (int r = 0; r < p.q; ++r)
      v = (v << 1) | y.bits[static_cast<std::size_t>(j) * p.q + r];
    words[j] = v;
  }
  return words;
}

OneHotBits decompress(const BinaryBits &y, const EncodingParams &p) {
  const auto words = binary_words(y, p);
  for (int j = 0; j < p.n; ++j)
    if (words[j] >= p.S)
      throw CodecError(CodecError::Kind::padding_leak, j, words[j],
                       "block " + std::to_string(j) + " decodes to padded word " +
                           std::to_string(words[j]) + " >= S=" + std::to_string(p.S));
  return onehot_from_symbols(words, p);
}

OneHotBits onehot_from_symbols(const std::vector<int> &symbols,
                               const EncodingParams &p) {
  if (static_cast<int>(symbols.size()) != p.n)
    throw Error(ErrorCode::invalid_argument, "symbol count != n");
  OneHotBits b{std::vector<std::uint8_t>(p.onehot_length(), 0)};
  for (int j = 0; j < p.n; ++j) {
    if (symbols[j] < 0 || symbols[j] >= p.S)
      throw Error(ErrorCode::invalid_argument, "symbol out of range");
    b.bits[static_cast<std::size_t>(j) * p.S + symbols[j]] = 1;
  }
  return b;
}

BinaryBits binary_from_words(const std::vector<int> &words, const EncodingParams &p) {
  if (static_cast<int>(words.size()) != p.n)
    throw Error(ErrorCode::invalid_argument, "word count != n");
  BinaryBits y{std::vector<std::uint8_t>(p.binary_length(), 0)};
  for (int j = 0; j < p.n; ++j) {
    if (words[j] < 0 || words[j] >= (1 << p.q))
      throw Error(ErrorCode::invalid_argument, "word does not fit in q bits");
    for (int r = 0; r < p.q; ++r)
      y.bits[static_cast<std::size_t>(j) * p.q + r] =
          static_cast<std::uint8_t>((words[j] >> (p.q - 1 - r)) & 1);
  }
  return y;
}

}  // namespace cpr
