// Copyright 2026 The bflab Authors
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

namespace bflab {

/// Argument has the wrong length or arity for the operation.
class InputShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured solver or enumeration cap would be exceeded.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::uint64_t cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

class MalformedClaimError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A query game was driven outside its rules.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Per-solver caps. Exceeding one is always an error, never an approximation.
struct Limits {
  int dense_cap = 24;
  int bs_cap = 16;
  int cert_cap = 20;
  int dt_cap = 14;
  int andtree_cap = 5;
  std::uint64_t enumeration_budget = std::uint64_t{1} << 24;
};

inline void require_within(int arity, int cap, const char* what) {
  if (arity > cap) {
    throw CapacityError(std::string(what) + ": arity " + std::to_string(arity) + " exceeds limit",
                        static_cast<std::uint64_t>(cap));
  }
}

}  // namespace bflab
