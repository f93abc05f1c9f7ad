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
#include <stdexcept>
#include <string>

namespace cpr {

/// Coarse error category. The C API maps each category onto a status code.
enum class ErrorCode {
  invalid_argument = 1,
  parse,
  io,
  codec,
  config,
  budget,
  ceiling,
  empty_optimal_set,
  unsupported,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the bitstring codecs. `block` is the offending block (0-based);
/// `value` carries the decoded word for padding leaks or the customer index
/// for once-each violations.
class CodecError : public Error {
 public:
  enum class Kind { length, zero_hot, multi_hot, not_once_each, padding_leak };

  CodecError(Kind kind, int block, std::int64_t value, const std::string &what)
      : Error(ErrorCode::codec, what), kind_(kind), block_(block), value_(value) {}

  Kind kind() const noexcept { return kind_; }
  int block() const noexcept { return block_; }
  std::int64_t value() const noexcept { return value_; }

 private:
  Kind kind_;
  int block_;
  std::int64_t value_;
};

}  // namespace cpr
