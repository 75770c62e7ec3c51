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

// Reference implementations used as test oracles. They follow the textbook
// definitions directly and share no code with the library's solvers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bflab/truth_table.hpp"

namespace oracle {

using Fn = std::function<bool(const std::vector<int>&)>;

inline std::vector<int> bits(std::uint64_t e, int n) {
  std::vector<int> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = (e >> i) & 1;
  return x;
}

inline bflab::DenseTruthTable table(int n, const Fn& f) {
  bflab::DenseTruthTable t(n);
  for (std::uint64_t e = 0; e < t.size(); ++e) t.set(e, f(bits(e, n)));
  return t;
}

// Families, written from their definitions over 0-based vectors.

inline bool rubinstein(const std::vector<int>& x, int b, int n) {
  int good = 0;
  for (int j = 0; j < n; ++j) {
    bool ok = true;
    for (int i = 0; i < b * n; ++i) {
      const bool inside = i >= j * b && i < (j + 1) * b;
      if (x[static_cast<std::size_t>(i)] != (inside ? 1 : 0)) ok = false;
    }
    good += ok;
  }
  return good == 1;
}

inline bool modified_rubinstein(const std::vector<int>& x, int b, int n, int r) {
  for (int c = 0; c < r; ++c) {
    std::vector<int> part(x.begin() + c * b * n, x.begin() + (c + 1) * b * n);
    if (rubinstein(part, b, n)) return true;
  }
  return false;
}

inline bool tribes(const std::vector<int>& x, int n) {
  for (int i = 0; i < n; ++i) {
    int any = 0;
    for (int j = 0; j < n; ++j) any |= x[static_cast<std::size_t>(i * n + j)];
    if (!any) return false;
  }
  return true;
}

inline bool dual_tribes(const std::vector<int>& x, int n) {
  for (int i = 0; i < n; ++i) {
    int all = 1;
    for (int j = 0; j < n; ++j) all &= x[static_cast<std::size_t>(i * n + j)];
    if (all) return true;
  }
  return false;
}

// Measures by brute force.

inline int sensitivity_at(const bflab::DenseTruthTable& f, std::uint64_t x) {
  int s = 0;
  for (int i = 0; i < f.arity(); ++i) s += f.get(x) != f.get(x ^ (1ULL << i));
  return s;
}

/// Maximum number of disjoint sensitive blocks, trying every block as the
/// one containing the lowest still-usable variable, or skipping it.
inline int block_sensitivity_at(const bflab::DenseTruthTable& f, std::uint64_t x) {
  const std::uint64_t all = f.size() - 1;
  std::function<int(std::uint64_t)> go = [&](std::uint64_t avail) -> int {
    if (avail == 0) return 0;
    const std::uint64_t low = avail & (~avail + 1);
    int best = go(avail & ~low);
    const std::uint64_t rest = avail & ~low;
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint64_t blk = sub | low;
      if (f.get(x ^ blk) != f.get(x)) best = std::max(best, 1 + go(avail & ~blk));
      if (sub == 0) break;
    }
    return best;
  };
  return go(all);
}

inline bool certifies(const bflab::DenseTruthTable& f, std::uint64_t x, std::uint64_t s) {
  for (std::uint64_t y = 0; y < f.size(); ++y) {
    if ((y & s) == (x & s) && f.get(y) != f.get(x)) return false;
  }
  return true;
}

inline int certificate_at(const bflab::DenseTruthTable& f, std::uint64_t x) {
  int best = f.arity();
  for (std::uint64_t s = 0; s < f.size(); ++s) {
    if (std::popcount(s) < best && oracle::certifies(f, x, s)) best = std::popcount(s);
  }
  return best;
}

template <class PerPoint>
int aggregate(const bflab::DenseTruthTable& f, int want, PerPoint per) {
  int best = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if (want < 0 || static_cast<int>(f.get(x)) == want) best = std::max(best, per(f, x));
  }
  return best;
}

/// Decision-tree minimax over restrictions written as strings of 0/1/*.
struct TreeOracle {
  const bflab::DenseTruthTable& f;
  int cost0;
  int cost1;
  std::map<std::string, int> memo;

  int run() { return go(std::string(static_cast<std::size_t>(f.arity()), '*')); }

  int go(const std::string& rho) {
    if (auto it = memo.find(rho); it != memo.end()) return it->second;
    int seen = -1;
    bool constant = true;
    for (std::uint64_t e = 0; e < f.size() && constant; ++e) {
      bool match = true;
      for (int i = 0; i < f.arity(); ++i) {
        const char c = rho[static_cast<std::size_t>(i)];
        if (c != '*' && (c == '1') != static_cast<bool>((e >> i) & 1U)) match = false;
      }
      if (!match) continue;
      if (seen < 0) seen = f.get(e);
      if (seen != static_cast<int>(f.get(e))) constant = false;
    }
    int best = 0;
    if (!constant) {
      best = 1 << 20;
      for (std::size_t i = 0; i < rho.size(); ++i) {
        if (rho[i] != '*') continue;
        std::string a = rho;
        std::string b = rho;
        a[i] = '0';
        b[i] = '1';
        best = std::min(best, std::max(cost0 + go(a), cost1 + go(b)));
      }
    }
    return memo[rho] = best;
  }
};

/// AND-decision-tree depth by plain recursion over the set of consistent inputs.
inline int and_tree_depth(const bflab::DenseTruthTable& f) {
  std::map<std::vector<std::uint64_t>, int> memo;
  std::function<int(const std::vector<std::uint64_t>&)> go = [&](const std::vector<std::uint64_t>& dom) -> int {
    bool one = false;
    bool zero = false;
    for (auto e : dom) (f.get(e) ? one : zero) = true;
    if (!one || !zero) return 0;
    if (auto it = memo.find(dom); it != memo.end()) return it->second;
    int best = 1 << 20;
    for (std::uint64_t s = 1; s < f.size(); ++s) {
      std::vector<std::uint64_t> yes;
      std::vector<std::uint64_t> no;
      for (auto e : dom) ((e & s) == s ? yes : no).push_back(e);
      if (yes.empty() || no.empty()) continue;
      best = std::min(best, 1 + std::max(go(yes), go(no)));
    }
    return memo[dom] = best;
  };
  std::vector<std::uint64_t> all(f.size());
  for (std::uint64_t e = 0; e < f.size(); ++e) all[e] = e;
  return go(all);
}

/// Walsh-Hadamard coefficients of (-1)^f by the defining sum.
inline std::vector<std::int64_t> walsh(const bflab::DenseTruthTable& f) {
  std::vector<std::int64_t> out(f.size());
  for (std::uint64_t s = 0; s < f.size(); ++s) {
    std::int64_t sum = 0;
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      const int sign = (f.get(x) ? 1 : 0) ^ (std::popcount(s & x) & 1);
      sum += sign ? -1 : 1;
    }
    out[s] = sum;
  }
  return out;
}

/// Multilinear coefficients by inclusion-exclusion over subsets.
inline int degree(const bflab::DenseTruthTable& f) {
  int deg = 0;
  for (std::uint64_t s = 0; s < f.size(); ++s) {
    std::int64_t c = 0;
    for (std::uint64_t t = s;; t = (t - 1) & s) {
      const int sign = (std::popcount(s ^ t) & 1) ? -1 : 1;
      c += sign * static_cast<int>(f.get(t));
      if (t == 0) break;
    }
    if (c != 0) deg = std::max(deg, std::popcount(s));
  }
  return deg;
}

/// splitmix64; deterministic on every platform.
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline bflab::DenseTruthTable random_table(Rng& rng, int n) {
  bflab::DenseTruthTable t(n);
  for (std::uint64_t e = 0; e < t.size(); ++e) t.set(e, rng.next() & 1U);
  return t;
}

}  // namespace oracle
