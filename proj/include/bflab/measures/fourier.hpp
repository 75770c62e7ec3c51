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

/// Walsh-Hadamard spectrum of the +-1 version of f (0 -> +1, 1 -> -1),
/// scaled by 2^arity so every entry is an integer: entry S is
/// sum_x (-1)^(f(x) + <S, x>).
inline std::vector<std::int64_t> walsh_hadamard(const DenseTruthTable& f, const Limits& limits = {}) {
  require_within(f.arity(), limits.dense_cap, "Walsh-Hadamard transform");
  std::vector<std::int64_t> a(f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x) a[x] = f.get(x) ? -1 : 1;
  for (std::size_t h = 1; h < a.size(); h <<= 1) {
    for (std::size_t i = 0; i < a.size(); i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t u = a[j];
        const std::int64_t v = a[j + h];
        a[j] = u + v;
        a[j + h] = u - v;
      }
    }
  }
  return a;
}

inline int fourier_sparsity(const DenseTruthTable& f, const Limits& limits = {}) {
  int k = 0;
  for (auto c : walsh_hadamard(f, limits)) k += c != 0;
  return k;
}

/// Coefficients of the multilinear polynomial of f in the 0/1 monomial basis:
/// entry S = sum over T subset of S of (-1)^(|S|-|T|) f(T).
inline std::vector<std::int64_t> mobius(const DenseTruthTable& f, const Limits& limits = {}) {
  require_within(f.arity(), limits.dense_cap, "Mobius transform");
  std::vector<std::int64_t> a(f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x) a[x] = f.get(x);
  for (int i = 0; i < f.arity(); ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (s & bit) a[s] -= a[s ^ bit];
    }
  }
  return a;
}

/// Real degree; 0 for constants (including the zero function).
inline int degree(const DenseTruthTable& f, const Limits& limits = {}) {
  const auto c = mobius(f, limits);
  int d = 0;
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (c[s] != 0) d = std::max(d, std::popcount(s));
  }
  return d;
}

}  // namespace bflab
