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
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bflab/errors.hpp"

namespace bflab {

/// Bit-packed truth table of f : {0,1}^arity -> {0,1}.
///
/// Bit e of the table is f(x) where e = sum_i x_i * 2^i over 0-based
/// variable indices, so variable i (1-based) is bit 2^(i-1) of the index.
/// Bits beyond 2^arity in the last word are kept at zero.
class DenseTruthTable {
 public:
  static constexpr int kStorageCeiling = 32;

  DenseTruthTable() : DenseTruthTable(0) {}

  explicit DenseTruthTable(int arity, bool fill = false, int cap = Limits{}.dense_cap)
      : arity_(arity) {
    if (arity < 0) throw InputShapeError("negative arity");
    require_within(arity, std::min(cap, kStorageCeiling), "dense truth table");
    words_.assign(word_count(arity), fill ? ~std::uint64_t{0} : 0);
    trim();
  }

  template <class Fn>
  static DenseTruthTable from_function(int arity, Fn&& fn, int cap = Limits{}.dense_cap) {
    DenseTruthTable t(arity, false, cap);
    const std::uint64_t n = t.size();
    for (std::uint64_t e = 0; e < n; ++e) {
      if (fn(e)) t.words_[e >> 6] |= std::uint64_t{1} << (e & 63);
    }
    return t;
  }

  /// Table of an arity <= 6 function from the low 2^arity bits of `bits`.
  static DenseTruthTable from_word(int arity, std::uint64_t bits) {
    if (arity > 6) throw InputShapeError("from_word needs arity <= 6");
    DenseTruthTable t(arity);
    t.words_[0] = bits;
    t.trim();
    return t;
  }

  int arity() const noexcept { return arity_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << arity_; }

  bool get(std::uint64_t e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1U; }
  bool operator[](std::uint64_t e) const noexcept { return get(e); }

  void set(std::uint64_t e, bool v) noexcept {
    const std::uint64_t m = std::uint64_t{1} << (e & 63);
    if (v) {
      words_[e >> 6] |= m;
    } else {
      words_[e >> 6] &= ~m;
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// Low word of the table; the whole table when arity <= 6.
  std::uint64_t word() const noexcept { return words_[0]; }

  std::uint64_t count_ones() const noexcept {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

  bool is_const0() const noexcept { return count_ones() == 0; }
  bool is_const1() const noexcept { return count_ones() == size(); }
  bool is_constant() const noexcept {
    const auto c = count_ones();
    return c == 0 || c == size();
  }

  /// g(x) = f(~x).
  DenseTruthTable complement_inputs() const {
    DenseTruthTable r(arity_, false, kStorageCeiling);
    const std::uint64_t mask = size() - 1;
    for (std::uint64_t e = 0; e < size(); ++e) {
      if (get(e)) r.set(e ^ mask, true);
    }
    return r;
  }

  /// g(x) = 1 - f(x).
  DenseTruthTable operator~() const {
    DenseTruthTable r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend bool operator==(const DenseTruthTable&, const DenseTruthTable&) = default;

  /// Lowercase hex, most significant digit first; bit 0 of the last digit is index 0.
  std::string to_hex() const {
    const std::uint64_t digits = (size() + 3) / 4;
    std::string out;
    out.reserve(digits);
    static constexpr char kHex[] = "0123456789abcdef";
    for (std::uint64_t d = digits; d-- > 0;) {
      const std::uint64_t bit = d * 4;
      unsigned nib = 0;
      for (unsigned k = 0; k < 4; ++k) {
        if (bit + k < size() && get(bit + k)) nib |= 1U << k;
      }
      out.push_back(kHex[nib]);
    }
    return out;
  }

  static DenseTruthTable from_hex(int arity, std::string_view hex, int cap = Limits{}.dense_cap) {
    DenseTruthTable t(arity, false, cap);
    const std::uint64_t digits = (t.size() + 3) / 4;
    if (hex.size() != digits) {
      throw InputShapeError("hex table for arity " + std::to_string(arity) + " needs " +
                            std::to_string(digits) + " digits, got " + std::to_string(hex.size()));
    }
    for (std::uint64_t i = 0; i < digits; ++i) {
      const char ch = hex[i];
      unsigned nib = 0;
      if (ch >= '0' && ch <= '9') {
        nib = static_cast<unsigned>(ch - '0');
      } else if (ch >= 'a' && ch <= 'f') {
        nib = static_cast<unsigned>(ch - 'a' + 10);
      } else if (ch >= 'A' && ch <= 'F') {
        nib = static_cast<unsigned>(ch - 'A' + 10);
      } else {
        throw InputShapeError(std::string("bad hex digit '") + ch + "'");
      }
      const std::uint64_t base = (digits - 1 - i) * 4;
      for (unsigned k = 0; k < 4; ++k) {
        if ((nib >> k) & 1U) {
          if (base + k >= t.size()) throw InputShapeError("hex table has bits beyond 2^arity");
          t.set(base + k, true);
        }
      }
    }
    return t;
  }

 private:
  static std::size_t word_count(int arity) {
    return arity <= 6 ? 1 : (std::size_t{1} << (arity - 6));
  }

  void trim() noexcept {
    if (arity_ < 6) words_[0] &= (std::uint64_t{1} << (std::uint64_t{1} << arity_)) - 1;
  }

  int arity_;
  std::vector<std::uint64_t> words_;
};

/// Writes the two-line text format: "arity: <n>" then the hex table.
inline void write_table_file(std::ostream& os, const DenseTruthTable& t) {
  os << "arity: " << t.arity() << '\n' << t.to_hex() << '\n';
}

inline std::string table_file_string(const DenseTruthTable& t) {
  std::ostringstream os;
  write_table_file(os, t);
  return os.str();
}

inline DenseTruthTable read_table_file(std::istream& is, int cap = Limits{}.dense_cap) {
  std::string header;
  std::string hex;
  if (!std::getline(is, header)) throw InputShapeError("table file: missing arity line");
  if (!std::getline(is, hex)) throw InputShapeError("table file: missing table line");
  constexpr std::string_view kPrefix = "arity:";
  if (header.rfind(kPrefix, 0) != 0) throw InputShapeError("table file: line 1 must start with 'arity:'");
  int arity = -1;
  try {
    arity = std::stoi(header.substr(kPrefix.size()));
  } catch (const std::exception&) {
    throw InputShapeError("table file: unparsable arity");
  }
  while (!hex.empty() && (hex.back() == '\r' || hex.back() == ' ')) hex.pop_back();
  return DenseTruthTable::from_hex(arity, hex, cap);
}

}  // namespace bflab
