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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bflab/errors.hpp"
#include "bflab/truth_table.hpp"

namespace bflab {

/// One answered query: the conjunction of the listed variables (1-based).
/// A singleton set is an ordinary variable query.
struct QueryRecord {
  std::vector<int> set;
  bool answer = false;

  friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

struct GameTranscript {
  std::vector<QueryRecord> queries;
  int zero_count = 0;
  int one_count = 0;
  std::optional<bool> output;
  bool complete = false;  ///< false when the query limit stopped the game

  void record(std::vector<int> set, bool answer) {
    queries.push_back({std::move(set), answer});
    ++(answer ? one_count : zero_count);
  }

  /// The stored counts agree with the query list.
  bool counts_consistent() const {
    const auto ones = std::count_if(queries.begin(), queries.end(), [](const QueryRecord& q) { return q.answer; });
    return one_count == ones && zero_count == static_cast<int>(queries.size()) - ones;
  }

  friend bool operator==(const GameTranscript&, const GameTranscript&) = default;
};

inline void to_json(nlohmann::json& j, const GameTranscript& t) {
  auto qs = nlohmann::json::array();
  for (const auto& q : t.queries) qs.push_back({{"set", q.set}, {"answer", q.answer ? 1 : 0}});
  j = nlohmann::json{{"queries", qs},
                     {"zero_count", t.zero_count},
                     {"one_count", t.one_count},
                     {"output", t.output ? nlohmann::json(*t.output ? 1 : 0) : nlohmann::json(nullptr)},
                     {"complete", t.complete}};
}

inline void from_json(const nlohmann::json& j, GameTranscript& t) {
  t = GameTranscript{};
  for (const auto& q : j.at("queries")) t.record(q.at("set").get<std::vector<int>>(), q.at("answer").get<int>() != 0);
  if (!j.at("output").is_null()) t.output = j.at("output").get<int>() != 0;
  t.complete = j.value("complete", t.output.has_value());
}

/// What a sequence of conjunction answers implies about the hidden input.
///
/// Answers of 1 and singleton answers fix variables; an answer of 0 on a
/// larger set is a clause "some member is 0". Free variables can always be
/// set to 0, so the answers are satisfiable iff no variable is fixed both
/// ways and every clause keeps a member not fixed to 1.
class Knowledge {
 public:
  explicit Knowledge(int arity) : value_(static_cast<std::size_t>(arity), -1) {}

  int arity() const noexcept { return static_cast<int>(value_.size()); }

  /// -1 unknown, else the forced value of variable v (1-based).
  int value(int v) const { return value_[static_cast<std::size_t>(v - 1)]; }
  bool known(int v) const { return value(v) >= 0; }
  bool consistent() const noexcept { return consistent_; }

  void add(const std::vector<int>& set, bool answer) {
    if (answer || set.size() == 1) {
      for (int v : set) fix(v, answer);
    } else {
      clauses_.push_back(set);
    }
    propagate();
  }

  void add(const GameTranscript& t) {
    for (const auto& q : t.queries) add(q.set, q.answer);
  }

  /// Bits of the hidden input known so far; unknown bits read as 0.
  std::vector<std::uint8_t> zero_fill() const {
    std::vector<std::uint8_t> x(value_.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = value_[i] == 1;
    return x;
  }

 private:
  void fix(int v, bool b) {
    auto& cell = value_[static_cast<std::size_t>(v - 1)];
    if (cell >= 0 && cell != static_cast<int>(b)) consistent_ = false;
    cell = b ? 1 : 0;
  }

  // A clause whose other members are all 1 forces its last member to 0.
  void propagate() {
    bool changed = true;
    while (changed && consistent_) {
      changed = false;
      for (const auto& cl : clauses_) {
        int open = 0;
        int last = 0;
        bool satisfied = false;
        for (int v : cl) {
          const int x = value(v);
          if (x == 0) satisfied = true;
          if (x < 0) {
            ++open;
            last = v;
          }
        }
        if (satisfied) continue;
        if (open == 0) {
          consistent_ = false;
        } else if (open == 1) {
          fix(last, false);
          changed = true;
        }
      }
    }
  }

  std::vector<int> value_;
  std::vector<std::vector<int>> clauses_;
  bool consistent_ = true;
};

/// Which outputs of f remain possible given the answers: bit 0 for output 0,
/// bit 1 for output 1. Brute force over all inputs of f.
inline unsigned possible_outputs(const DenseTruthTable& f, const GameTranscript& t) {
  unsigned out = 0;
  for (std::uint64_t e = 0; e < f.size() && out != 3; ++e) {
    bool ok = true;
    for (const auto& q : t.queries) {
      bool conj = true;
      for (int v : q.set) conj = conj && ((e >> (v - 1)) & 1U);
      if (conj != q.answer) {
        ok = false;
        break;
      }
    }
    if (ok) out |= f.get(e) ? 2U : 1U;
  }
  return out;
}

/// A querier's move: either a query set or a final output.
struct Move {
  std::vector<int> query;
  std::optional<bool> output;

  static Move ask(std::vector<int> set) { return {std::move(set), std::nullopt}; }
  static Move ask(int v) { return {{v}, std::nullopt}; }
  static Move answer(bool b) { return {{}, b}; }
};

/// Deterministic players: every move is a function of the transcript so far.
class Querier {
 public:
  virtual ~Querier() = default;
  virtual int arity() const = 0;
  virtual Move next(const GameTranscript& t) = 0;
};

class Responder {
 public:
  virtual ~Responder() = default;
  virtual int arity() const = 0;
  /// Called with a validated query; the transcript excludes this query.
  virtual bool answer(const std::vector<int>& set, const GameTranscript& t) = 0;
};

/// Answers every conjunction from a fixed input.
class TruthfulResponder final : public Responder {
 public:
  explicit TruthfulResponder(std::vector<std::uint8_t> x) : x_(std::move(x)) {}
  int arity() const override { return static_cast<int>(x_.size()); }
  bool answer(const std::vector<int>& set, const GameTranscript&) override {
    return std::all_of(set.begin(), set.end(), [&](int v) { return x_[static_cast<std::size_t>(v - 1)] != 0; });
  }

 private:
  std::vector<std::uint8_t> x_;
};

/// Runs the game until the querier outputs or `query_limit` queries are answered.
///
/// Rejected queries: empty sets, out-of-range or repeated members, and sets
/// containing a variable already fixed by earlier answers. After each answer
/// the transcript must still be satisfiable.
inline GameTranscript play(Querier& querier, Responder& responder, int query_limit) {
  if (querier.arity() != responder.arity()) throw InputShapeError("querier and responder arities differ");
  if (query_limit < 1) throw InputShapeError("query limit must be >= 1");
  GameTranscript t;
  Knowledge know(querier.arity());
  for (;;) {
    Move mv = querier.next(t);
    if (mv.output) {
      t.output = mv.output;
      t.complete = true;
      return t;
    }
    if (static_cast<int>(t.queries.size()) >= query_limit) {
      t.complete = false;
      return t;
    }
    auto& set = mv.query;
    if (set.empty()) throw ProtocolError("empty query");
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) throw ProtocolError("query repeats a variable");
    for (int v : set) {
      if (v < 1 || v > querier.arity()) throw ProtocolError("query variable " + std::to_string(v) + " out of range");
      if (know.known(v)) throw ProtocolError("query variable " + std::to_string(v) + " is already fixed");
    }
    const bool a = responder.answer(set, t);
    know.add(set, a);
    if (!know.consistent()) throw ProtocolError("responder answers are inconsistent with every input");
    t.record(std::move(set), a);
  }
}

/// Queries variables in a fixed order and outputs once f is determined.
class SequentialQuerier final : public Querier {
 public:
  SequentialQuerier(DenseTruthTable f, std::vector<int> order) : f_(std::move(f)), order_(std::move(order)) {}

  int arity() const override { return f_.arity(); }
  Move next(const GameTranscript& t) override {
    const unsigned p = possible_outputs(f_, t);
    if (p != 3) return Move::answer(p == 2);
    return Move::ask(order_.at(t.queries.size()));
  }

 private:
  DenseTruthTable f_;
  std::vector<int> order_;
};

}  // namespace bflab
