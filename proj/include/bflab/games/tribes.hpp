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
#include <numeric>
#include <unordered_map>
#include <vector>

#include "bflab/constructions.hpp"
#include "bflab/games/transcript.hpp"
#include "bflab/measures/decision_tree.hpp"

namespace bflab {

/// Adversary for tribes(n) on single-variable queries. Block i is
/// variables (i-1)n+1..in. A query completing its block is answered 1 while
/// fewer than n^2 variables have been queried in total; every other query
/// is answered 0.
class TribesAdversary final : public Responder {
 public:
  explicit TribesAdversary(int n) : n_(n), blocks_(static_cast<std::size_t>(n)), seen_(static_cast<std::size_t>(n * n)) {
    if (n < 1) throw InputShapeError("tribes adversary needs n >= 1");
  }

  int arity() const override { return n_ * n_; }
  int n() const noexcept { return n_; }

  /// X_i: variables of block i (0-based i) queried so far, in query order.
  const std::vector<int>& block_queries(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }
  int total() const noexcept { return total_; }

  bool respond(int v) {
    if (v < 1 || v > arity()) throw ProtocolError("tribes query " + std::to_string(v) + " out of range");
    if (seen_[static_cast<std::size_t>(v - 1)]) throw ProtocolError("tribes variable " + std::to_string(v) + " queried twice");
    seen_[static_cast<std::size_t>(v - 1)] = 1;
    auto& x = blocks_[static_cast<std::size_t>((v - 1) / n_)];
    x.push_back(v);
    ++total_;
    return static_cast<int>(x.size()) == n_ && total_ < n_ * n_;
  }

  /// A conjunction is answered member by member in ascending order.
  bool answer(const std::vector<int>& set, const GameTranscript&) override {
    bool all = true;
    for (int v : set) all = respond(v) && all;
    return all;
  }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<std::uint8_t> seen_;
  int total_ = 0;
};

/// Upper-bound AND strategy for tribes(n): probe the first n-1 variables of
/// every block, then ask one conjunction over the last variable of each
/// block that answered all zeros. Outputs 1 at once if there is no such block.
class TribesAndStrategy final : public Querier {
 public:
  explicit TribesAndStrategy(int n) : n_(n) {
    if (n < 1) throw InputShapeError("tribes strategy needs n >= 1");
  }

  int arity() const override { return n_ * n_; }

  Move next(const GameTranscript& t) override {
    const int probes = n_ * (n_ - 1);
    const int asked = static_cast<int>(t.queries.size());
    if (asked < probes) {
      const int block = asked / (n_ - 1);
      return Move::ask(block * n_ + asked % (n_ - 1) + 1);
    }
    if (asked == probes) {
      std::vector<int> last;
      for (int b = 0; b < n_; ++b) {
        bool zero = true;
        for (int j = 0; j < n_ - 1; ++j) zero = zero && !t.queries[static_cast<std::size_t>(b * (n_ - 1) + j)].answer;
        if (zero) last.push_back((b + 1) * n_);
      }
      if (last.empty()) return Move::answer(true);
      return Move::ask(std::move(last));
    }
    return Move::answer(t.queries.back().answer);
  }

 private:
  int n_;
};

/// Plays the optimal decision tree for a minimax cost (cost0, cost1) on f;
/// with (1, 0) this attains the 0-depth.
class MinimaxQuerier final : public Querier {
 public:
  MinimaxQuerier(DenseTruthTable f, int cost0, int cost1, const Limits& limits = {})
      : f_(std::move(f)), cost0_(cost0), cost1_(cost1) {
    require_within(f_.arity(), limits.dt_cap, "minimax querier");
  }

  int arity() const override { return f_.arity(); }

  Move next(const GameTranscript& t) override {
    std::uint64_t fixed = 0;
    std::uint64_t ones = 0;
    for (const auto& q : t.queries) {
      if (q.set.size() != 1) throw ProtocolError("minimax querier only handles single-variable transcripts");
      fixed |= std::uint64_t{1} << (q.set[0] - 1);
      if (q.answer) ones |= std::uint64_t{1} << (q.set[0] - 1);
    }
    const std::uint64_t free = ~fixed & detail::low_mask(f_.arity());
    const DenseTruthTable g = restrict_table_masks(f_, free, ones);
    if (g.is_constant()) return Move::answer(g.is_const1());
    int best = -1;
    int best_cost = 1 << 30;
    int pos = 0;
    for (int v = 1; v <= f_.arity(); ++v) {
      if (fixed >> (v - 1) & 1U) continue;
      const std::uint64_t bit = std::uint64_t{1} << pos++;
      const auto g0 = restrict_table_masks(g, ~bit & detail::low_mask(g.arity()), 0);
      const auto g1 = restrict_table_masks(g, ~bit & detail::low_mask(g.arity()), bit);
      const int c = std::max(cost0_ + detail::restriction_minimax(g0, cost0_, cost1_),
                             cost1_ + detail::restriction_minimax(g1, cost0_, cost1_));
      if (c < best_cost) {
        best_cost = c;
        best = v;
      }
    }
    return Move::ask(best);
  }

 private:
  DenseTruthTable f_;
  int cost0_;
  int cost1_;
};

// Exact game value against the tribes adversary.

struct AdversaryGameValue {
  int value = 0;          ///< min over queriers of the forced 0-answers
  int min_queries = 0;    ///< min over queriers of queries before the value is fixed
  std::uint64_t states = 0;
  bool forcing = false;   ///< every state with fewer than n^2 queries leaves both outputs open
};

namespace detail {

/// Per-variable state: 0 unqueried, 1 answered 0, 2 answered 1.
class TribesGameSearch {
 public:
  explicit TribesGameSearch(int n) : n_(n), cells_(static_cast<std::size_t>(n * n), 0) {}

  AdversaryGameValue run() {
    const auto [zeros, queries] = solve(0);
    AdversaryGameValue out;
    out.value = zeros;
    out.min_queries = queries;
    out.states = memo_.size();
    out.forcing = forcing_;
    return out;
  }

 private:
  // Both outputs remain possible iff all-ones completion accepts and
  // all-zeros completion rejects (tribes is monotone).
  unsigned open_outputs() const {
    bool hi = true;
    bool lo = true;
    for (int b = 0; b < n_; ++b) {
      bool any_hi = false;
      bool any_lo = false;
      for (int j = 0; j < n_; ++j) {
        const int s = cells_[static_cast<std::size_t>(b * n_ + j)];
        any_hi = any_hi || s != 1;
        any_lo = any_lo || s == 2;
      }
      hi = hi && any_hi;
      lo = lo && any_lo;
    }
    return (lo ? 2U : 1U) | (hi ? 2U : 1U);
  }

  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (auto it = cells_.rbegin(); it != cells_.rend(); ++it) k = k * 3 + *it;
    return k;
  }

  std::pair<int, int> solve(int total) {
    const unsigned open = open_outputs();
    if (open != 3) {
      if (total < n_ * n_) forcing_ = false;
      return {0, 0};
    }
    const auto k = key();
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    int best_zeros = 1 << 30;
    int best_queries = 1 << 30;
    for (int v = 0; v < n_ * n_; ++v) {
      auto& cell = cells_[static_cast<std::size_t>(v)];
      if (cell != 0) continue;
      int in_block = 1;
      for (int j = 0; j < n_; ++j) in_block += cells_[static_cast<std::size_t>(v / n_ * n_ + j)] != 0;
      const bool ans = in_block == n_ && total + 1 < n_ * n_;
      cell = ans ? 2 : 1;
      const auto [z, q] = solve(total + 1);
      cell = 0;
      best_zeros = std::min(best_zeros, z + (ans ? 0 : 1));
      best_queries = std::min(best_queries, q + 1);
    }
    return memo_[k] = {best_zeros, best_queries};
  }

  int n_;
  std::vector<std::uint8_t> cells_;
  std::unordered_map<std::uint64_t, std::pair<int, int>> memo_;
  bool forcing_ = true;
};

}  // namespace detail

/// Minimum number of 0-answers any single-variable querier must receive from
/// TribesAdversary(n) before tribes(n) is determined. Capped at n <= 3.
inline AdversaryGameValue adversary_game_value(int n) {
  if (n < 1) throw InputShapeError("n must be >= 1");
  if (n > 3) throw CapacityError("adversary game value needs n <= 3, got n = " + std::to_string(n), 3);
  return detail::TribesGameSearch(n).run();
}

}  // namespace bflab
