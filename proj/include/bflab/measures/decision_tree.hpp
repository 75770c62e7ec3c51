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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "bflab/measures/common.hpp"

namespace bflab {

namespace detail {

/// Bottom-up minimax over all 3^arity restrictions of f.
///
/// A restriction is a base-3 index whose digit i is 0, 1 or 2 (free). Fixing
/// a free digit lowers the index, so one ascending sweep sees every child
/// before its parent. `cost0` / `cost1` charge a query by its answer.
inline int restriction_minimax(const DenseTruthTable& f, int cost0, int cost1) {
  const int n = f.arity();
  std::vector<std::uint32_t> pow3(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) pow3[static_cast<std::size_t>(i)] = pow3[static_cast<std::size_t>(i - 1)] * 3;
  const std::size_t total = pow3[static_cast<std::size_t>(n)];
  constexpr std::uint8_t kMixed = 2;
  std::vector<std::uint8_t> value(total);
  std::vector<std::uint8_t> depth(total);
  std::vector<std::uint8_t> digit(static_cast<std::size_t>(n), 0);
  std::uint64_t ones = 0;
  std::uint64_t free = 0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (free == 0) {
      value[idx] = f.get(ones);
      depth[idx] = 0;
    } else {
      const int lo = std::countr_zero(free);
      const std::uint8_t a = value[idx - 2 * pow3[static_cast<std::size_t>(lo)]];
      const std::uint8_t b = value[idx - pow3[static_cast<std::size_t>(lo)]];
      value[idx] = (a == b) ? a : kMixed;
      if (value[idx] != kMixed) {
        depth[idx] = 0;
      } else {
        int best = 255;
        for (std::uint64_t rest = free; rest; rest &= rest - 1) {
          const int i = std::countr_zero(rest);
          const int d0 = cost0 + depth[idx - 2 * pow3[static_cast<std::size_t>(i)]];
          const int d1 = cost1 + depth[idx - pow3[static_cast<std::size_t>(i)]];
          best = std::min(best, std::max(d0, d1));
        }
        depth[idx] = static_cast<std::uint8_t>(best);
      }
    }
    for (int j = 0; j < n; ++j) {
      auto& d = digit[static_cast<std::size_t>(j)];
      const std::uint64_t bit = std::uint64_t{1} << j;
      if (d == 0) {
        d = 1;
        ones |= bit;
        break;
      }
      if (d == 1) {
        d = 2;
        ones &= ~bit;
        free |= bit;
        break;
      }
      d = 0;
      free &= ~bit;
    }
  }
  return depth[total - 1];
}

}  // namespace detail

/// Deterministic query complexity D(f).
inline int dt_depth(const DenseTruthTable& f, const Limits& limits = {}) {
  require_within(f.arity(), limits.dt_cap, "decision tree depth");
  return detail::restriction_minimax(f, 1, 1);
}

/// Minimum over decision trees of the largest number of 0-answers on a path.
inline int zero_depth(const DenseTruthTable& f, const Limits& limits = {}) {
  require_within(f.arity(), limits.dt_cap, "0-depth");
  return detail::restriction_minimax(f, 1, 0);
}

inline int one_depth(const DenseTruthTable& f, const Limits& limits = {}) {
  require_within(f.arity(), limits.dt_cap, "1-depth");
  return detail::restriction_minimax(f, 0, 1);
}

}  // namespace bflab
