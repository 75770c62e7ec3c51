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
#include <optional>
#include <vector>

#include "bflab/constructions.hpp"
#include "bflab/games/transcript.hpp"
#include "bflab/games/tribes.hpp"
#include "bflab/measures/certificate.hpp"

namespace bflab {

/// Adversary for the tribes(n) cheat sheet with c copies: bits outside the
/// input copies are answered 0; bits inside copy i go to an independent
/// TribesAdversary for that copy.
class CheatSheetAdversary final : public Responder {
 public:
  CheatSheetAdversary(int n, int c, const Limits& limits = {})
      : spec_(make_cheat_sheet_spec(tribes(n), c, limits)), n_(n) {
    for (int i = 0; i < c; ++i) copies_.emplace_back(n);
  }

  const CheatSheetSpec& spec() const noexcept { return spec_; }
  int arity() const override { return static_cast<int>(spec_.arity()); }
  const TribesAdversary& copy_state(int i) const { return copies_.at(static_cast<std::size_t>(i)); }

  bool respond(int v) {
    if (v < 1 || v > arity()) throw ProtocolError("cheat-sheet query " + std::to_string(v) + " out of range");
    const int N = n_ * n_;
    if (v > spec_.c * N) return false;
    return copies_[static_cast<std::size_t>((v - 1) / N)].respond((v - 1) % N + 1);
  }

  bool answer(const std::vector<int>& set, const GameTranscript&) override {
    if (set.size() != 1) throw ProtocolError("cheat-sheet adversary answers single-variable queries only");
    return respond(set[0]);
  }

 private:
  CheatSheetSpec spec_;
  int n_;
  std::vector<TribesAdversary> copies_;
};

/// Partial assignment to a cheat-sheet input built from single-bit answers,
/// with an exact test of which outputs are still reachable.
class CheatSheetView {
 public:
  explicit CheatSheetView(const CheatSheetSpec& spec) : spec_(&spec), bits_(spec.arity(), -1) {}

  void set(int v, bool b) { bits_.at(static_cast<std::size_t>(v - 1)) = b ? 1 : 0; }
  void add(const GameTranscript& t) {
    for (const auto& q : t.queries) {
      if (q.set.size() != 1) throw ProtocolError("cheat-sheet transcripts hold single-variable queries only");
      set(q.set[0], q.answer);
    }
  }
  int bit(std::uint64_t pos0) const { return bits_[pos0]; }

  int copy_queries() const { return count(0, spec_->copies_bits()); }
  int copy_queries(int i) const {
    return count(spec_->copy_offset(i), spec_->copy_offset(i) + static_cast<std::uint64_t>(spec_->base_arity()));
  }
  bool cell_touched(std::uint64_t cell) const {
    return count(spec_->cell_offset(cell), spec_->cell_offset(cell) + spec_->cell_bits()) > 0;
  }
  std::vector<std::uint64_t> untouched_cells() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t l = 0; l < spec_->cell_count(); ++l) {
      if (!cell_touched(l)) out.push_back(l);
    }
    return out;
  }

  /// Bit 0: output 0 reachable; bit 1: output 1 reachable. Enumerates copy
  /// completions and, per addressed claim, its unknown bits.
  unsigned possible_outputs() const {
    const int N = spec_->base_arity();
    std::vector<std::vector<std::uint64_t>> copy_options(static_cast<std::size_t>(spec_->c));
    for (int i = 0; i < spec_->c; ++i) {
      for (std::uint64_t e = 0; e < (std::uint64_t{1} << N); ++e) {
        if (agrees(spec_->copy_offset(i), N, e)) copy_options[static_cast<std::size_t>(i)].push_back(e);
      }
    }
    unsigned out = 0;
    std::vector<std::size_t> pick(static_cast<std::size_t>(spec_->c), 0);
    for (;;) {
      std::uint64_t cell = 0;
      for (int i = 0; i < spec_->c; ++i) {
        if (spec_->base_table.get(copy_options[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]])) {
          cell |= std::uint64_t{1} << i;
        }
      }
      bool all_can_pass = true;
      bool some_can_fail = false;
      for (int i = 0; i < spec_->c && (all_can_pass || !some_can_fail); ++i) {
        const auto x = bits_of(copy_options[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]], N);
        const unsigned claim = claim_outcomes(cell, i, x, (cell >> i) & 1U);
        all_can_pass = all_can_pass && (claim & 2U);
        some_can_fail = some_can_fail || (claim & 1U);
      }
      if (all_can_pass) out |= 2U;
      if (some_can_fail) out |= 1U;
      if (out == 3U) return out;
      int i = 0;
      for (; i < spec_->c; ++i) {
        auto& p = pick[static_cast<std::size_t>(i)];
        if (++p < copy_options[static_cast<std::size_t>(i)].size()) break;
        p = 0;
      }
      if (i == spec_->c) return out;
    }
  }

 private:
  int count(std::uint64_t from, std::uint64_t to) const {
    int k = 0;
    for (std::uint64_t p = from; p < to; ++p) k += bits_[p] >= 0;
    return k;
  }

  bool agrees(std::uint64_t offset, int width, std::uint64_t value) const {
    for (int j = 0; j < width; ++j) {
      const int b = bits_[offset + static_cast<std::uint64_t>(j)];
      if (b >= 0 && b != static_cast<int>((value >> j) & 1U)) return false;
    }
    return true;
  }

  // Bit 0: some completion of the claim fails; bit 1: some completion holds.
  unsigned claim_outcomes(std::uint64_t cell, int i, const BitVector& copy, bool value) const {
    const std::uint64_t off = spec_->claim_offset(cell, i);
    const int m = spec_->m;
    std::vector<std::uint8_t> buf(spec_->arity(), 0);
    unsigned out = 0;
    for (std::uint64_t e = 0; e < (std::uint64_t{1} << m) && out != 3U; ++e) {
      if (!agrees(off, m, e)) continue;
      for (int j = 0; j < m; ++j) buf[off + static_cast<std::uint64_t>(j)] = (e >> j) & 1U;
      out |= spec_->claim_valid(spec_->decode_claim(buf, cell, i), copy, value) ? 2U : 1U;
    }
    return out;
  }

  const CheatSheetSpec* spec_;
  std::vector<int> bits_;
};

/// Queries every copy bit in order, then the addressed cell, stopping as soon
/// as the output is determined.
class CopiesFirstQuerier final : public Querier {
 public:
  explicit CopiesFirstQuerier(const CheatSheetSpec& spec) : spec_(spec) {}
  int arity() const override { return static_cast<int>(spec_.arity()); }

  Move next(const GameTranscript& t) override {
    CheatSheetView view(spec_);
    view.add(t);
    const unsigned p = view.possible_outputs();
    if (p != 3U) return Move::answer(p == 2U);
    for (std::uint64_t pos = 0; pos < spec_.copies_bits(); ++pos) {
      if (view.bit(pos) < 0) return Move::ask(static_cast<int>(pos) + 1);
    }
    return ask_cell(view, t);
  }

 protected:
  Move ask_cell(const CheatSheetView& view, const GameTranscript& t) const {
    BitVector x = view_bits(view);
    const std::uint64_t cell = spec_.addressed_cell(x);
    for (std::uint64_t pos = spec_.cell_offset(cell); pos < spec_.cell_offset(cell) + spec_.cell_bits(); ++pos) {
      if (view.bit(pos) < 0) return Move::ask(static_cast<int>(pos) + 1);
    }
    (void)t;
    throw ProtocolError("querier found no open bit while the output is undetermined");
  }

  BitVector view_bits(const CheatSheetView& view) const {
    BitVector x(spec_.arity(), 0);
    for (std::uint64_t p = 0; p < x.size(); ++p) x[p] = view.bit(p) == 1;
    return x;
  }

  const CheatSheetSpec& spec_;
};

/// Touches one bit of every cell first, then proceeds like CopiesFirstQuerier.
class CellScanQuerier final : public Querier {
 public:
  explicit CellScanQuerier(const CheatSheetSpec& spec) : spec_(spec), inner_(spec) {}
  int arity() const override { return static_cast<int>(spec_.arity()); }

  Move next(const GameTranscript& t) override {
    CheatSheetView view(spec_);
    view.add(t);
    const unsigned p = view.possible_outputs();
    if (p != 3U) return Move::answer(p == 2U);
    for (std::uint64_t l = 0; l < spec_.cell_count(); ++l) {
      if (!view.cell_touched(l)) return Move::ask(static_cast<int>(spec_.cell_offset(l)) + 1);
    }
    return inner_.next(t);
  }

 private:
  const CheatSheetSpec& spec_;
  CopiesFirstQuerier inner_;
};

// The lower-bound dichotomy: a transcript either spends at least N = n^2
// queries on the input copies, or leaves a cell untouched that can be made
// the addressed cell and filled either way.

struct Completion {
  BitVector input;
  bool output = false;
};

struct DichotomyAnalysis {
  int queries = 0;
  int copy_queries = 0;
  int cell_touches = 0;  ///< distinct cells with a queried bit
  bool copy_case = false;  ///< copy_queries >= N
  std::optional<std::uint64_t> free_cell;
  std::optional<Completion> completion0;
  std::optional<Completion> completion1;

  bool flip_case() const noexcept {
    return free_cell && completion0 && completion1 && !completion0->output && completion1->output;
  }
  bool holds() const noexcept { return copy_case || flip_case(); }
};

namespace detail {

/// Completes `copy` (with unknowns -1) to a base input of value `want`,
/// preferring the all-equal fill of the unknown bits.
inline std::optional<std::uint64_t> complete_copy(const CheatSheetSpec& spec, const std::vector<int>& known,
                                                  bool want) {
  const int N = spec.base_arity();
  std::uint64_t fixed = 0;
  std::uint64_t ones = 0;
  for (int j = 0; j < N; ++j) {
    if (known[static_cast<std::size_t>(j)] >= 0) {
      fixed |= std::uint64_t{1} << j;
      if (known[static_cast<std::size_t>(j)] == 1) ones |= std::uint64_t{1} << j;
    }
  }
  const std::uint64_t fill = want ? (~fixed & detail::low_mask(N)) : 0;
  if (spec.base_table.get(ones | fill) == want) return ones | fill;
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << N); ++e) {
    if ((e & fixed) == ones && spec.base_table.get(e) == want) return e;
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks the dichotomy on a finished or truncated transcript and, in the
/// second case, builds both completions explicitly and re-evaluates them.
inline DichotomyAnalysis analyze_cheatsheet_transcript(const CheatSheetSpec& spec, const GameTranscript& t,
                                                       const Limits& limits = {}) {
  CheatSheetView view(spec);
  view.add(t);
  DichotomyAnalysis out;
  out.queries = static_cast<int>(t.queries.size());
  out.copy_queries = view.copy_queries();
  for (std::uint64_t l = 0; l < spec.cell_count(); ++l) out.cell_touches += view.cell_touched(l);
  out.copy_case = out.copy_queries >= spec.base_arity();
  const auto free_cells = view.untouched_cells();
  if (free_cells.empty()) return out;

  const int N = spec.base_arity();
  for (std::uint64_t cell : free_cells) {
    BitVector x(spec.arity(), 0);
    for (std::uint64_t p = 0; p < x.size(); ++p) x[p] = view.bit(p) == 1;
    bool reachable = true;
    for (int i = 0; i < spec.c && reachable; ++i) {
      std::vector<int> known(static_cast<std::size_t>(N));
      for (int j = 0; j < N; ++j) known[static_cast<std::size_t>(j)] = view.bit(spec.copy_offset(i) + static_cast<std::uint64_t>(j));
      const auto e = detail::complete_copy(spec, known, (cell >> i) & 1U);
      if (!e) {
        reachable = false;
        break;
      }
      for (int j = 0; j < N; ++j) x[spec.copy_offset(i) + static_cast<std::uint64_t>(j)] = (*e >> j) & 1U;
    }
    if (!reachable) continue;

    // Output 1: write a minimum certificate of each copy into the cell.
    BitVector x1 = x;
    for (int i = 0; i < spec.c; ++i) {
      const auto copy = std::span<const std::uint8_t>(x1).subspan(spec.copy_offset(i), static_cast<std::size_t>(N));
      const auto cert = certificate_at(spec.base_table, index_of(copy), limits);
      CertificateClaim claim;
      for (std::uint64_t s = cert.witness; s; s &= s - 1) {
        const int j = std::countr_zero(s);
        claim.entries.push_back({j + 1, copy[static_cast<std::size_t>(j)] != 0});
      }
      while (static_cast<int>(claim.entries.size()) < spec.cert_size) claim.entries.push_back(claim.entries.back());
      spec.encode_claim(x1, cell, i, claim);
    }
    // Output 0: the cell stays all zeros.
    const BitVector& x0 = x;
    const Completion c0{x0, spec.evaluate(x0)};
    const Completion c1{x1, spec.evaluate(x1)};

    auto agrees = [&](const BitVector& z) {
      for (const auto& q : t.queries) {
        if ((z[static_cast<std::size_t>(q.set[0] - 1)] != 0) != q.answer) return false;
      }
      return true;
    };
    if (!agrees(c0.input) || !agrees(c1.input)) continue;
    out.free_cell = cell;
    out.completion0 = c0;
    out.completion1 = c1;
    if (!c0.output && c1.output) break;
  }
  return out;
}

struct ShortSequenceReport {
  int length = 0;                 ///< sequences of exactly this many queries
  std::uint64_t sequences = 0;
  std::uint64_t determined = 0;   ///< sequences after which the output is fixed
  std::uint64_t dichotomy_failures = 0;
  std::optional<std::vector<int>> first_failure;
};

/// Every ordered sequence of `length` distinct single-bit queries played
/// against a fresh CheatSheetAdversary. With length < N no sequence may fix
/// the output, and each must meet the dichotomy through the flip case.
inline ShortSequenceReport exhaustive_short_sequences(int n, int c, int length, const Limits& limits = {}) {
  CheatSheetAdversary proto(n, c, limits);
  const auto& spec = proto.spec();
  const int A = proto.arity();
  if (length < 0 || length > A) throw InputShapeError("sequence length out of range");
  ShortSequenceReport rep;
  rep.length = length;
  std::vector<int> seq;
  std::vector<std::uint8_t> used(static_cast<std::size_t>(A) + 1, 0);
  auto visit = [&]() {
    CheatSheetAdversary adv(n, c, limits);
    GameTranscript t;
    for (int v : seq) t.record({v}, adv.respond(v));
    ++rep.sequences;
    CheatSheetView view(spec);
    view.add(t);
    if (view.possible_outputs() != 3U) ++rep.determined;
    if (!analyze_cheatsheet_transcript(spec, t, limits).holds()) {
      if (!rep.first_failure) rep.first_failure = seq;
      ++rep.dichotomy_failures;
    }
  };
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == length) {
      visit();
      return;
    }
    for (int v = 1; v <= A; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      seq.push_back(v);
      self(self);
      seq.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec);
  return rep;
}

}  // namespace bflab
