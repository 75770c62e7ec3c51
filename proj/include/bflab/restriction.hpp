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

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bflab/errors.hpp"
#include "bflab/truth_table.hpp"

namespace bflab {

enum class Cell : std::uint8_t { Zero, One, Free };

/// Partial assignment rho : [arity] -> {0, 1, *}.
///
/// The restricted function f|rho has free_count() inputs; its input j is the
/// j-th Free position in ascending original order.
class Restriction {
 public:
  Restriction() = default;
  explicit Restriction(std::vector<Cell> cells) : cells_(std::move(cells)) {}

  static Restriction all_free(int arity) { return Restriction(std::vector<Cell>(arity, Cell::Free)); }

  /// Builds from masks over arity <= 64 variables; `ones` bits outside `free` are the fixed ones.
  static Restriction from_masks(int arity, std::uint64_t free, std::uint64_t ones) {
    std::vector<Cell> c(arity);
    for (int i = 0; i < arity; ++i) {
      if ((free >> i) & 1U) {
        c[i] = Cell::Free;
      } else {
        c[i] = ((ones >> i) & 1U) ? Cell::One : Cell::Zero;
      }
    }
    return Restriction(std::move(c));
  }

  /// Literal over {0,1,*}; character i is variable i+1.
  static Restriction parse(std::string_view s) {
    std::vector<Cell> c;
    c.reserve(s.size());
    for (char ch : s) {
      switch (ch) {
        case '0': c.push_back(Cell::Zero); break;
        case '1': c.push_back(Cell::One); break;
        case '*': c.push_back(Cell::Free); break;
        default: throw InputShapeError(std::string("restriction literal: bad character '") + ch + "'");
      }
    }
    return Restriction(std::move(c));
  }

  int arity() const noexcept { return static_cast<int>(cells_.size()); }
  Cell operator[](int i) const { return cells_.at(static_cast<std::size_t>(i)); }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  int free_count() const noexcept {
    int k = 0;
    for (Cell c : cells_) k += (c == Cell::Free);
    return k;
  }

  std::vector<int> free_positions() const {
    std::vector<int> p;
    for (int i = 0; i < arity(); ++i) {
      if (cells_[i] == Cell::Free) p.push_back(i);
    }
    return p;
  }

  std::uint64_t free_mask() const { return mask_of(Cell::Free); }
  std::uint64_t ones_mask() const { return mask_of(Cell::One); }

  /// Full input index of the original function for restricted input index `y`.
  std::uint64_t merge_index(std::uint64_t y) const {
    std::uint64_t x = ones_mask();
    int j = 0;
    for (int i = 0; i < arity(); ++i) {
      if (cells_[i] == Cell::Free) {
        if ((y >> j) & 1U) x |= std::uint64_t{1} << i;
        ++j;
      }
    }
    return x;
  }

  std::vector<std::uint8_t> merge(std::span<const std::uint8_t> y) const {
    if (static_cast<int>(y.size()) != free_count()) {
      throw InputShapeError("merge: input has " + std::to_string(y.size()) + " bits, restriction has " +
                            std::to_string(free_count()) + " free cells");
    }
    std::vector<std::uint8_t> x(cells_.size());
    std::size_t j = 0;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      switch (cells_[i]) {
        case Cell::Zero: x[i] = 0; break;
        case Cell::One: x[i] = 1; break;
        case Cell::Free: x[i] = y[j++] ? 1 : 0; break;
      }
    }
    return x;
  }

  /// rho' such that f|rho' = (f|this)|inner, with `inner` over this restriction's free cells.
  Restriction compose(const Restriction& inner) const {
    if (inner.arity() != free_count()) {
      throw InputShapeError("compose: inner restriction arity " + std::to_string(inner.arity()) +
                            " != free count " + std::to_string(free_count()));
    }
    std::vector<Cell> c = cells_;
    int j = 0;
    for (auto& cell : c) {
      if (cell == Cell::Free) cell = inner.cells_[static_cast<std::size_t>(j++)];
    }
    return Restriction(std::move(c));
  }

  std::string to_string() const {
    std::string s;
    s.reserve(cells_.size());
    for (Cell c : cells_) s.push_back(c == Cell::Zero ? '0' : c == Cell::One ? '1' : '*');
    return s;
  }

  friend bool operator==(const Restriction&, const Restriction&) = default;

 private:
  std::uint64_t mask_of(Cell want) const {
    if (arity() > 64) throw InputShapeError("restriction mask needs arity <= 64");
    std::uint64_t m = 0;
    for (int i = 0; i < arity(); ++i) {
      if (cells_[i] == want) m |= std::uint64_t{1} << i;
    }
    return m;
  }

  std::vector<Cell> cells_;
};

/// Dense f|rho from masks (arity <= 64). Submasks of `free` are visited in
/// increasing order, which is increasing order of the restricted index.
inline DenseTruthTable restrict_table_masks(const DenseTruthTable& f, std::uint64_t free, std::uint64_t ones) {
  DenseTruthTable r(std::popcount(free), false, DenseTruthTable::kStorageCeiling);
  std::uint64_t s = 0;
  std::uint64_t y = 0;
  do {
    if (f.get(ones | s)) r.set(y, true);
    ++y;
    s = (s - free) & free;
  } while (s != 0);
  return r;
}

inline DenseTruthTable restrict_table(const DenseTruthTable& f, const Restriction& rho) {
  if (rho.arity() != f.arity()) {
    throw InputShapeError("restrict: restriction arity " + std::to_string(rho.arity()) +
                          " != function arity " + std::to_string(f.arity()));
  }
  return restrict_table_masks(f, rho.free_mask(), rho.ones_mask());
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// C(arity, free) * 2^(arity - free), saturating at UINT64_MAX.
inline std::uint64_t restriction_count(int arity, int free_count) {
  const std::uint64_t c = binomial(arity, free_count);
  const int fixed = arity - free_count;
  if (fixed >= 64 || c > (UINT64_MAX >> fixed)) return UINT64_MAX;
  return c << fixed;
}

/// Every restriction with exactly `free_count` free cells, once each:
/// free sets in lexicographic order of their sorted index lists, then
/// assignments to the fixed cells counting upward (bit j of the counter is the
/// j-th fixed cell in ascending order).
class RestrictionEnumerator {
 public:
  RestrictionEnumerator(int arity, int free_count, const Limits& limits = {})
      : arity_(arity), free_(free_count) {
    if (free_count < 0 || free_count > arity) {
      throw InputShapeError("enumerate_restrictions: free count " + std::to_string(free_count) +
                            " outside [0, " + std::to_string(arity) + "]");
    }
    if (arity > 64) throw InputShapeError("enumerate_restrictions: arity > 64");
    total_ = restriction_count(arity, free_count);
    if (total_ > limits.enumeration_budget) {
      throw CapacityError("enumerate_restrictions: " + std::to_string(arity) + " variables with " +
                              std::to_string(free_count) + " free needs " +
                              (total_ == UINT64_MAX ? std::string("> 2^64") : std::to_string(total_)) +
                              " restrictions",
                          limits.enumeration_budget);
    }
    combo_.resize(static_cast<std::size_t>(free_count));
    for (int i = 0; i < free_count; ++i) combo_[static_cast<std::size_t>(i)] = i;
    load_combo();
  }

  std::uint64_t total() const noexcept { return total_; }

  /// Next restriction as (free mask, ones mask); false when exhausted.
  bool next_masks(std::uint64_t& free, std::uint64_t& ones) {
    if (done_) return false;
    free = free_mask_;
    ones = deposit(assignment_);
    advance();
    return true;
  }

  std::optional<Restriction> next() {
    std::uint64_t f = 0;
    std::uint64_t o = 0;
    if (!next_masks(f, o)) return std::nullopt;
    return Restriction::from_masks(arity_, f, o);
  }

 private:
  void load_combo() {
    free_mask_ = 0;
    for (int v : combo_) free_mask_ |= std::uint64_t{1} << v;
    fixed_.clear();
    for (int i = 0; i < arity_; ++i) {
      if (!((free_mask_ >> i) & 1U)) fixed_.push_back(i);
    }
    assignment_ = 0;
  }

  std::uint64_t deposit(std::uint64_t a) const {
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < fixed_.size(); ++j) {
      if ((a >> j) & 1U) m |= std::uint64_t{1} << fixed_[j];
    }
    return m;
  }

  void advance() {
    const std::size_t nfixed = fixed_.size();
    ++assignment_;
    if (nfixed < 64 && assignment_ < (std::uint64_t{1} << nfixed)) return;
    // next combination in lexicographic order
    int i = free_ - 1;
    while (i >= 0 && combo_[static_cast<std::size_t>(i)] == arity_ - free_ + i) --i;
    if (i < 0) {
      done_ = true;
      return;
    }
    ++combo_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < free_; ++j) combo_[static_cast<std::size_t>(j)] = combo_[static_cast<std::size_t>(j - 1)] + 1;
    load_combo();
  }

  int arity_;
  int free_;
  std::uint64_t total_ = 0;
  std::vector<int> combo_;
  std::vector<int> fixed_;
  std::uint64_t free_mask_ = 0;
  std::uint64_t assignment_ = 0;
  bool done_ = false;
};

inline RestrictionEnumerator enumerate_restrictions(int arity, int free_count, const Limits& limits = {}) {
  return RestrictionEnumerator(arity, free_count, limits);
}

}  // namespace bflab
