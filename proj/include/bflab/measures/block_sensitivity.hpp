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
#include <unordered_map>
#include <vector>

#include "bflab/measures/common.hpp"

namespace bflab {

/// Disjoint sensitive blocks at `point`; blocks are variable masks (bit i = variable i+1).
struct BlockFamily {
  std::uint64_t point = 0;
  std::vector<std::uint64_t> blocks;
};

struct BlockSensitivityResult {
  int value = 0;
  BlockFamily witness;
};

/// Sensitive blocks at x with no sensitive proper subset, ascending by mask.
inline std::vector<std::uint64_t> minimal_sensitive_blocks(const DenseTruthTable& f, std::uint64_t x) {
  const std::size_t n = f.size();
  const bool v = f.get(x);
  std::vector<std::uint8_t> sens(n);
  for (std::size_t s = 0; s < n; ++s) sens[s] = f.get(x ^ s) != v;
  std::vector<std::uint8_t> below = sens;
  detail::subset_or(below, f.arity());
  std::vector<std::uint64_t> out;
  for (std::size_t s = 1; s < n; ++s) {
    if (!sens[s]) continue;
    bool minimal = true;
    for (std::size_t rest = s; rest && minimal; rest &= rest - 1) {
      const std::size_t bit = rest & (~rest + 1);
      if (below[s ^ bit]) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

namespace detail {

/// Maximum disjoint packing of `blocks`. The optimum is computed by a memoized
/// branch on the lowest coverable variable; the witness is then the
/// lexicographically smallest optimal packing (blocks compared by mask value),
/// found by an ordered DFS pruned with the exact optimum of the remaining pool.
class BlockPacker {
 public:
  explicit BlockPacker(std::vector<std::uint64_t> blocks) : blocks_(std::move(blocks)) {}

  int optimum(std::uint64_t avail) {
    std::uint64_t coverable = 0;
    for (auto b : blocks_) {
      if ((b & ~avail) == 0) coverable |= b;
    }
    if (coverable == 0) return 0;
    avail &= coverable;
    if (auto it = memo_.find(avail); it != memo_.end()) return it->second;
    const std::uint64_t v = avail & (~avail + 1);
    int best = optimum(avail & ~v);
    for (auto b : blocks_) {
      if ((b & v) && (b & ~avail) == 0) best = std::max(best, 1 + optimum(avail & ~b));
    }
    memo_.emplace(avail, best);
    return best;
  }

  std::vector<std::uint64_t> smallest_packing(std::uint64_t avail, int target) {
    std::vector<std::uint64_t> chosen;
    if (target == 0) return chosen;
    search(0, avail, target, chosen);
    return chosen;
  }

 private:
  bool search(std::size_t start, std::uint64_t avail, int target, std::vector<std::uint64_t>& chosen) {
    if (static_cast<int>(chosen.size()) == target) return true;
    for (std::size_t k = start; k < blocks_.size(); ++k) {
      const std::uint64_t b = blocks_[k];
      if (b & ~avail) continue;
      const std::uint64_t rest = avail & ~b;
      if (static_cast<int>(chosen.size()) + 1 + optimum(rest) < target) continue;
      chosen.push_back(b);
      if (search(k + 1, rest, target, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  std::vector<std::uint64_t> blocks_;
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace detail

/// Exact bs(f, x) with a witness of minimal sensitive blocks.
inline BlockSensitivityResult block_sensitivity_at(const DenseTruthTable& f, std::uint64_t x,
                                                   const Limits& limits = {}) {
  require_within(f.arity(), limits.bs_cap, "block sensitivity");
  BlockSensitivityResult r;
  r.witness.point = x;
  auto blocks = minimal_sensitive_blocks(f, x);
  if (blocks.empty()) return r;
  detail::BlockPacker packer(std::move(blocks));
  const std::uint64_t all = f.size() - 1;
  r.value = packer.optimum(all);
  r.witness.blocks = packer.smallest_packing(all, r.value);
  return r;
}

/// Value only; skips witness reconstruction.
inline int block_sensitivity_value_at(const DenseTruthTable& f, std::uint64_t x, const Limits& limits = {}) {
  require_within(f.arity(), limits.bs_cap, "block sensitivity");
  auto blocks = minimal_sensitive_blocks(f, x);
  if (blocks.empty()) return 0;
  detail::BlockPacker packer(std::move(blocks));
  return packer.optimum(f.size() - 1);
}

inline int block_sensitivity(const DenseTruthTable& f, ValueTag tag = ValueTag::All, const Limits& limits = {}) {
  require_within(f.arity(), limits.bs_cap, "block sensitivity");
  int best = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if (!tag_admits(tag, f.get(x))) continue;
    // bs(f, x) <= arity, so once reached nothing can beat it
    best = std::max(best, block_sensitivity_value_at(f, x, limits));
    if (best == f.arity()) break;
  }
  return best;
}

/// Disjoint, non-empty, and each block flips f at the point.
inline bool verify_block_family(const DenseTruthTable& f, const BlockFamily& fam) {
  std::uint64_t seen = 0;
  const bool v = f.get(fam.point);
  for (auto b : fam.blocks) {
    if (b == 0 || (b & seen) || b >= f.size()) return false;
    seen |= b;
    if (f.get(fam.point ^ b) == v) return false;
  }
  return true;
}

}  // namespace bflab
