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
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bflab/measures/common.hpp"
#include "bflab/measures/decision_tree.hpp"

namespace bflab {

/// Decision tree whose internal nodes query the conjunction of a variable set.
struct AndDecisionTree {
  struct Node {
    std::uint64_t query = 0;  ///< variable mask; 0 on leaves
    int child0 = -1;
    int child1 = -1;
    bool output = false;
    bool is_leaf() const noexcept { return query == 0; }
  };

  int arity = 0;
  std::vector<Node> nodes;  ///< nodes[0] is the root

  bool evaluate(std::uint64_t x) const {
    int at = 0;
    while (!nodes[static_cast<std::size_t>(at)].is_leaf()) {
      const auto& nd = nodes[static_cast<std::size_t>(at)];
      at = ((x & nd.query) == nd.query) ? nd.child1 : nd.child0;
    }
    return nodes[static_cast<std::size_t>(at)].output;
  }

  int depth() const { return depth_from(0); }

  bool computes(const DenseTruthTable& f) const {
    if (f.arity() != arity) return false;
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      if (evaluate(x) != f.get(x)) return false;
    }
    return true;
  }

 private:
  int depth_from(int at) const {
    const auto& nd = nodes[static_cast<std::size_t>(at)];
    if (nd.is_leaf()) return 0;
    return 1 + std::max(depth_from(nd.child0), depth_from(nd.child1));
  }
};

/// Exact AND-decision-tree depth by search over partial functions.
///
/// A search state is the set D of inputs still consistent with the answers so
/// far together with the accepting subset T of D. Querying S splits D by the
/// all-ones subcube on S. States are memoized on (D, T) and the table is kept
/// across calls, so one solver can sweep many functions of the same arity.
class AndTreeSolver {
 public:
  explicit AndTreeSolver(int arity, const Limits& limits = {}) : arity_(arity) {
    require_within(arity, std::min(limits.andtree_cap, 5), "AND-decision tree");
    const std::uint32_t inputs = 1U << arity;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << arity); ++s) {
      std::uint32_t cube = 0;
      for (std::uint32_t e = 0; e < inputs; ++e) {
        if ((e & s) == s) cube |= 1U << e;
      }
      queries_.emplace_back(s, cube);
    }
    full_ = inputs == 32 ? ~0U : (1U << inputs) - 1;
  }

  int arity() const noexcept { return arity_; }

  int depth(const DenseTruthTable& f) { return solve(full_, accepting_set(f)); }

  AndDecisionTree tree(const DenseTruthTable& f) {
    AndDecisionTree t;
    t.arity = arity_;
    build(t, full_, accepting_set(f));
    return t;
  }

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  std::uint32_t accepting_set(const DenseTruthTable& f) const {
    if (f.arity() != arity_) throw InputShapeError("AND-tree solver arity mismatch");
    return static_cast<std::uint32_t>(f.word());
  }

  static std::uint64_t key(std::uint32_t d, std::uint32_t t) {
    // output complement does not change depth
    const std::uint32_t alt = d & ~t;
    return (std::uint64_t{d} << 32) | std::min(t, alt);
  }

  int solve(std::uint32_t d, std::uint32_t t) {
    if (t == 0 || t == d) return 0;
    const std::uint64_t k = key(d, t);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    int best = 255;
    std::uint32_t seen[32];
    int nseen = 0;
    for (const auto& [s, cube] : queries_) {
      const std::uint32_t in = d & cube;
      if (in == 0 || in == d) continue;
      if (std::find(seen, seen + nseen, in) != seen + nseen) continue;
      if (nseen < 32) seen[nseen++] = in;
      const int a = solve(in, t & in);
      if (1 + a >= best) continue;
      const int b = solve(d & ~in, t & ~in);
      best = std::min(best, 1 + std::max(a, b));
      if (best == 1) break;
    }
    memo_.emplace(k, static_cast<std::uint8_t>(best));
    return best;
  }

  int build(AndDecisionTree& t, std::uint32_t d, std::uint32_t acc) {
    const int id = static_cast<int>(t.nodes.size());
    t.nodes.emplace_back();
    if (acc == 0 || acc == d) {
      t.nodes[static_cast<std::size_t>(id)].output = acc != 0;
      return id;
    }
    const int want = solve(d, acc);
    for (const auto& [s, cube] : queries_) {
      const std::uint32_t in = d & cube;
      if (in == 0 || in == d) continue;
      if (1 + std::max(solve(in, acc & in), solve(d & ~in, acc & ~in)) != want) continue;
      t.nodes[static_cast<std::size_t>(id)].query = s;
      const int c1 = build(t, in, acc & in);
      const int c0 = build(t, d & ~in, acc & ~in);
      t.nodes[static_cast<std::size_t>(id)].child1 = c1;
      t.nodes[static_cast<std::size_t>(id)].child0 = c0;
      return id;
    }
    throw std::logic_error("AND-tree reconstruction found no optimal query");
  }

  int arity_;
  std::uint32_t full_ = 0;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> queries_;
  std::unordered_map<std::uint64_t, std::uint8_t> memo_;
};

struct AndTreeResult {
  int depth = 0;
  AndDecisionTree witness;
};

inline AndTreeResult and_dt_depth_exact(const DenseTruthTable& f, const Limits& limits = {}) {
  AndTreeSolver solver(f.arity(), limits);
  AndTreeResult r;
  r.depth = solver.depth(f);
  r.witness = solver.tree(f);
  return r;
}

/// OR queries on x are negated AND queries on ~x, so an OR-tree for f is an
/// AND-tree for x -> 1 - f(~x) with complemented answers.
inline int or_dt_depth_exact(const DenseTruthTable& f, const Limits& limits = {}) {
  AndTreeSolver solver(f.arity(), limits);
  return solver.depth(~f.complement_inputs());
}

inline int ceil_log2(std::uint64_t v) {
  return v <= 1 ? 0 : 64 - std::countl_zero(v - 1);
}

struct DepthBounds {
  int lower = 0;
  int upper = 0;
};

/// (dqc0, dqc0 * ceil(log2(arity + 1))).
inline DepthBounds and_dt_depth_bounds(const DenseTruthTable& f, const Limits& limits = {}) {
  const int z = zero_depth(f, limits);
  return {z, z * ceil_log2(static_cast<std::uint64_t>(f.arity()) + 1)};
}

}  // namespace bflab
