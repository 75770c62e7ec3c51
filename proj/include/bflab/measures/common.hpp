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
#include <vector>

#include "bflab/errors.hpp"
#include "bflab/truth_table.hpp"

namespace bflab {

/// Which inputs an aggregate measure maximizes over (bs0, C1, ...).
enum class ValueTag { All, OnZeros, OnOnes };

inline bool tag_admits(ValueTag tag, bool value) {
  return tag == ValueTag::All || (tag == ValueTag::OnOnes) == value;
}

namespace detail {

/// In place: z[T] |= z[T \ {i}] for every i in T, so z[T] = OR of z over subsets of T.
inline void subset_or(std::vector<std::uint8_t>& z, int arity) {
  const std::size_t n = z.size();
  for (int i = 0; i < arity; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < n; ++s) {
      if (s & bit) z[s] |= z[s ^ bit];
    }
  }
}

}  // namespace detail

inline int sensitivity_at(const DenseTruthTable& f, std::uint64_t x) {
  const bool v = f.get(x);
  int s = 0;
  for (int i = 0; i < f.arity(); ++i) s += f.get(x ^ (std::uint64_t{1} << i)) != v;
  return s;
}

/// max of sensitivity_at over inputs admitted by `tag`; 0 if none are.
inline int sensitivity(const DenseTruthTable& f, ValueTag tag = ValueTag::All, const Limits& limits = {}) {
  require_within(f.arity(), limits.dense_cap, "sensitivity");
  int best = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if (tag_admits(tag, f.get(x))) best = std::max(best, sensitivity_at(f, x));
  }
  return best;
}

}  // namespace bflab
