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
#include <memory>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "bflab/errors.hpp"
#include "bflab/restriction.hpp"
#include "bflab/truth_table.hpp"

namespace bflab {

using BitVector = std::vector<std::uint8_t>;

/// Input bits of index `e` over `arity` variables, variable 0 first.
inline BitVector bits_of(std::uint64_t e, int arity) {
  BitVector x(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) x[static_cast<std::size_t>(i)] = (e >> i) & 1U;
  return x;
}

inline std::uint64_t index_of(std::span<const std::uint8_t> x) {
  if (x.size() > 64) throw InputShapeError("index_of: more than 64 bits");
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) e |= std::uint64_t{1} << i;
  }
  return e;
}

/// Parses "0110" (character i is variable i+1).
inline BitVector parse_bits(std::string_view s) {
  BitVector x;
  x.reserve(s.size());
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw InputShapeError(std::string("bit string: bad character '") + ch + "'");
    x.push_back(ch == '1');
  }
  return x;
}

inline std::string format_bits(std::span<const std::uint8_t> x) {
  std::string s;
  for (auto b : x) s.push_back(b ? '1' : '0');
  return s;
}

/// One (position, value) pair of a certificate; position is 1-based.
struct CertificateEntry {
  int position = 1;
  bool value = false;
  friend bool operator==(const CertificateEntry&, const CertificateEntry&) = default;
};

struct CertificateClaim {
  std::vector<CertificateEntry> entries;
  friend bool operator==(const CertificateClaim&, const CertificateClaim&) = default;
};

/// True iff every entry agrees with x and `table` is constant equal to
/// `claimed` on the subcube fixing exactly those positions.
inline bool certificate_holds(const DenseTruthTable& table, std::span<const std::uint8_t> x,
                              const CertificateClaim& claim, bool claimed) {
  const int arity = table.arity();
  if (static_cast<int>(x.size()) != arity) throw InputShapeError("certificate: input length != base arity");
  for (const auto& e : claim.entries) {
    if (e.position < 1 || e.position > arity) {
      throw MalformedClaimError("certificate position " + std::to_string(e.position) + " outside [1, " +
                                std::to_string(arity) + "]");
    }
  }
  std::uint64_t fixed = 0;
  std::uint64_t ones = 0;
  for (const auto& e : claim.entries) {
    const int i = e.position - 1;
    if ((x[static_cast<std::size_t>(i)] != 0) != e.value) return false;
    fixed |= std::uint64_t{1} << i;
    if (e.value) ones |= std::uint64_t{1} << i;
  }
  const std::uint64_t free = (table.size() - 1) & ~fixed;
  std::uint64_t s = 0;
  do {
    if (table.get(ones | s) != claimed) return false;
    s = (s - free) & free;
  } while (s != 0);
  return true;
}

class StructuredFunction;

struct DenseFn {
  DenseTruthTable table;
};
struct RubinsteinBaseFn {
  int b;
  int n;
};
struct ModifiedRubinsteinFn {
  int b;
  int n;
  int r;
};
struct TribesFn {
  int n;
};
struct DualTribesFn {
  int n;
};
struct CheatSheetFn;
struct RestrictedFn;
struct NegatedInputsFn;

/// Immutable, cheaply copyable handle to a lazily evaluated function.
class StructuredFunction {
 public:
  using Node = std::variant<DenseFn, RubinsteinBaseFn, ModifiedRubinsteinFn, TribesFn, DualTribesFn,
                            CheatSheetFn, RestrictedFn, NegatedInputsFn>;

  StructuredFunction();

  template <class T>
    requires(!std::is_same_v<std::remove_cvref_t<T>, StructuredFunction>)
  StructuredFunction(T&& node);  // NOLINT(google-explicit-constructor)

  int arity() const noexcept { return arity_; }
  const Node& node() const noexcept;

  template <class T>
  const T* as() const noexcept;

 private:
  struct Holder;
  std::shared_ptr<const Holder> node_;
  int arity_ = 0;
};

/// Layout of a cheat-sheet input: c base copies, then 2^c cells of c*m bits.
/// A cell holds c claims; a claim holds cert_size entries of ptr_width
/// position bits (0-based position, least significant bit first) followed by
/// one value bit.
struct CheatSheetSpec {
  StructuredFunction base;
  DenseTruthTable base_table;
  int c = 1;
  int cert_size = 1;
  int ptr_width = 0;
  int m = 1;

  int base_arity() const noexcept { return base_table.arity(); }
  std::uint64_t cell_count() const noexcept { return std::uint64_t{1} << c; }
  std::uint64_t cell_bits() const noexcept { return static_cast<std::uint64_t>(c) * static_cast<std::uint64_t>(m); }
  std::uint64_t copies_bits() const noexcept { return static_cast<std::uint64_t>(c) * static_cast<std::uint64_t>(base_arity()); }
  std::uint64_t arity() const noexcept { return copies_bits() + cell_count() * cell_bits(); }

  /// 0-based offset of copy i (0-based).
  std::uint64_t copy_offset(int i) const noexcept { return static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(base_arity()); }
  std::uint64_t cell_offset(std::uint64_t cell) const noexcept { return copies_bits() + cell * cell_bits(); }
  std::uint64_t claim_offset(std::uint64_t cell, int i) const noexcept {
    return cell_offset(cell) + static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(m);
  }

  /// Decodes claim i of `cell`; positions are reported 1-based and may exceed N.
  CertificateClaim decode_claim(std::span<const std::uint8_t> x, std::uint64_t cell, int i) const {
    CertificateClaim claim;
    std::uint64_t at = claim_offset(cell, i);
    for (int e = 0; e < cert_size; ++e) {
      int pos = 0;
      for (int k = 0; k < ptr_width; ++k) {
        if (x[at++]) pos |= 1 << k;
      }
      const bool v = x[at++] != 0;
      claim.entries.push_back({pos + 1, v});
    }
    return claim;
  }

  /// Writes `claim` into claim slot i of `cell`.
  void encode_claim(std::span<std::uint8_t> x, std::uint64_t cell, int i, const CertificateClaim& claim) const {
    if (static_cast<int>(claim.entries.size()) != cert_size) {
      throw MalformedClaimError("claim must have exactly " + std::to_string(cert_size) + " entries");
    }
    std::uint64_t at = claim_offset(cell, i);
    for (const auto& e : claim.entries) {
      const int pos = e.position - 1;
      if (pos < 0 || pos >= (1 << ptr_width)) throw MalformedClaimError("claim position does not fit the pointer width");
      for (int k = 0; k < ptr_width; ++k) x[at++] = (pos >> k) & 1;
      x[at++] = e.value ? 1 : 0;
    }
  }

  bool claim_valid(const CertificateClaim& claim, std::span<const std::uint8_t> copy, bool value) const {
    for (const auto& e : claim.entries) {
      if (e.position > base_arity()) return false;
    }
    return certificate_holds(base_table, copy, claim, value);
  }

  /// Cell addressed by the copies: bit i is the base value of copy i.
  std::uint64_t addressed_cell(std::span<const std::uint8_t> x) const {
    std::uint64_t cell = 0;
    for (int i = 0; i < c; ++i) {
      if (base_table.get(index_of(x.subspan(copy_offset(i), static_cast<std::size_t>(base_arity())))))
        cell |= std::uint64_t{1} << i;
    }
    return cell;
  }

  bool evaluate(std::span<const std::uint8_t> x) const {
    const std::uint64_t cell = addressed_cell(x);
    for (int i = 0; i < c; ++i) {
      const auto copy = x.subspan(copy_offset(i), static_cast<std::size_t>(base_arity()));
      if (!claim_valid(decode_claim(x, cell, i), copy, (cell >> i) & 1U)) return false;
    }
    return true;
  }
};

struct CheatSheetFn {
  CheatSheetSpec spec;
};

struct RestrictedFn {
  StructuredFunction inner;
  Restriction rho;
};

struct NegatedInputsFn {
  StructuredFunction inner;
};

namespace detail {

inline int node_arity(const StructuredFunction::Node& node) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, DenseFn>) {
          return n.table.arity();
        } else if constexpr (std::is_same_v<T, RubinsteinBaseFn>) {
          return n.b * n.n;
        } else if constexpr (std::is_same_v<T, ModifiedRubinsteinFn>) {
          return n.r * n.b * n.n;
        } else if constexpr (std::is_same_v<T, TribesFn> || std::is_same_v<T, DualTribesFn>) {
          return n.n * n.n;
        } else if constexpr (std::is_same_v<T, CheatSheetFn>) {
          return static_cast<int>(n.spec.arity());
        } else if constexpr (std::is_same_v<T, RestrictedFn>) {
          return n.rho.free_count();
        } else {
          return n.inner.arity();
        }
      },
      node);
}

inline void validate_node(const StructuredFunction::Node& node) {
  std::visit(
      [](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, RubinsteinBaseFn>) {
          if (n.b < 1 || n.n < 1) throw InputShapeError("rubinstein: b, n must be >= 1");
        } else if constexpr (std::is_same_v<T, ModifiedRubinsteinFn>) {
          if (n.b < 1 || n.n < 1 || n.r < 1) throw InputShapeError("modified rubinstein: b, n, r must be >= 1");
        } else if constexpr (std::is_same_v<T, TribesFn> || std::is_same_v<T, DualTribesFn>) {
          if (n.n < 1) throw InputShapeError("tribes: n must be >= 1");
        } else if constexpr (std::is_same_v<T, RestrictedFn>) {
          if (n.rho.arity() != n.inner.arity()) {
            throw InputShapeError("restricted: rho arity " + std::to_string(n.rho.arity()) +
                                  " != inner arity " + std::to_string(n.inner.arity()));
          }
        }
      },
      node);
}

// Block semantics on a bit span, variable 0 first.

inline bool rubinstein_bits(std::span<const std::uint8_t> x, int b, int n) {
  int ones = 0;
  int first = -1;
  for (int i = 0; i < b * n; ++i) {
    if (x[static_cast<std::size_t>(i)]) {
      if (first < 0) first = i;
      ++ones;
    }
  }
  if (ones != b || first % b != 0) return false;
  for (int i = first; i < first + b; ++i) {
    if (!x[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

inline bool tribes_bits(std::span<const std::uint8_t> x, int n) {
  for (int blk = 0; blk < n; ++blk) {
    bool any = false;
    for (int j = 0; j < n && !any; ++j) any = x[static_cast<std::size_t>(blk * n + j)] != 0;
    if (!any) return false;
  }
  return true;
}

inline bool dual_tribes_bits(std::span<const std::uint8_t> x, int n) {
  for (int blk = 0; blk < n; ++blk) {
    bool all = true;
    for (int j = 0; j < n && all; ++j) all = x[static_cast<std::size_t>(blk * n + j)] != 0;
    if (all) return true;
  }
  return false;
}

inline std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// Block semantics on a packed index (arity <= 64).

inline bool rubinstein_index(std::uint64_t x, int b, int n) {
  if (std::popcount(x) != b) return false;
  const int first = std::countr_zero(x);
  return first % b == 0 && x == (low_mask(b) << first) && first / b < n;
}

inline bool tribes_index(std::uint64_t x, int n) {
  const std::uint64_t blk = low_mask(n);
  for (int i = 0; i < n; ++i) {
    if (((x >> (i * n)) & blk) == 0) return false;
  }
  return true;
}

inline bool dual_tribes_index(std::uint64_t x, int n) {
  const std::uint64_t blk = low_mask(n);
  for (int i = 0; i < n; ++i) {
    if (((x >> (i * n)) & blk) == blk) return true;
  }
  return false;
}

bool eval_bits(const StructuredFunction& f, std::span<const std::uint8_t> x);
bool eval_index(const StructuredFunction& f, std::uint64_t x);

}  // namespace detail

struct StructuredFunction::Holder {
  Node node;
};

inline const StructuredFunction::Node& StructuredFunction::node() const noexcept { return node_->node; }

template <class T>
const T* StructuredFunction::as() const noexcept {
  return std::get_if<T>(&node_->node);
}

template <class T>
  requires(!std::is_same_v<std::remove_cvref_t<T>, StructuredFunction>)
StructuredFunction::StructuredFunction(T&& node)
    : node_(std::make_shared<const Holder>(Holder{Node(std::forward<T>(node))})) {
  detail::validate_node(node_->node);
  arity_ = detail::node_arity(node_->node);
}

inline StructuredFunction::StructuredFunction() : StructuredFunction(DenseFn{DenseTruthTable(0)}) {}

namespace detail {

inline bool eval_bits(const StructuredFunction& f, std::span<const std::uint8_t> x) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, DenseFn>) {
          return n.table.get(index_of(x));
        } else if constexpr (std::is_same_v<T, RubinsteinBaseFn>) {
          return rubinstein_bits(x, n.b, n.n);
        } else if constexpr (std::is_same_v<T, ModifiedRubinsteinFn>) {
          const std::size_t width = static_cast<std::size_t>(n.b * n.n);
          for (int copy = 0; copy < n.r; ++copy) {
            if (rubinstein_bits(x.subspan(copy * width, width), n.b, n.n)) return true;
          }
          return false;
        } else if constexpr (std::is_same_v<T, TribesFn>) {
          return tribes_bits(x, n.n);
        } else if constexpr (std::is_same_v<T, DualTribesFn>) {
          return dual_tribes_bits(x, n.n);
        } else if constexpr (std::is_same_v<T, CheatSheetFn>) {
          return n.spec.evaluate(x);
        } else if constexpr (std::is_same_v<T, RestrictedFn>) {
          const BitVector full = n.rho.merge(x);
          return eval_bits(n.inner, full);
        } else {
          BitVector flipped(x.begin(), x.end());
          for (auto& bit : flipped) bit ^= 1U;
          return eval_bits(n.inner, flipped);
        }
      },
      f.node());
}

inline bool eval_index(const StructuredFunction& f, std::uint64_t x) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, DenseFn>) {
          return n.table.get(x);
        } else if constexpr (std::is_same_v<T, RubinsteinBaseFn>) {
          return rubinstein_index(x, n.b, n.n);
        } else if constexpr (std::is_same_v<T, ModifiedRubinsteinFn>) {
          const int width = n.b * n.n;
          const std::uint64_t mask = low_mask(width);
          for (int copy = 0; copy < n.r; ++copy) {
            if (rubinstein_index((x >> (copy * width)) & mask, n.b, n.n)) return true;
          }
          return false;
        } else if constexpr (std::is_same_v<T, TribesFn>) {
          return tribes_index(x, n.n);
        } else if constexpr (std::is_same_v<T, DualTribesFn>) {
          return dual_tribes_index(x, n.n);
        } else if constexpr (std::is_same_v<T, CheatSheetFn>) {
          const BitVector bits = bits_of(x, f.arity());
          return n.spec.evaluate(bits);
        } else if constexpr (std::is_same_v<T, RestrictedFn>) {
          return eval_index(n.inner, n.rho.merge_index(x));
        } else {
          return eval_index(n.inner, x ^ low_mask(f.arity()));
        }
      },
      f.node());
}

}  // namespace detail

/// f(x) for an explicit input vector.
inline bool evaluate(const StructuredFunction& f, std::span<const std::uint8_t> x) {
  if (static_cast<int>(x.size()) != f.arity()) {
    throw InputShapeError("evaluate: input has " + std::to_string(x.size()) + " bits, function arity is " +
                          std::to_string(f.arity()));
  }
  if (f.arity() <= 64) return detail::eval_index(f, index_of(x));
  return detail::eval_bits(f, x);
}

/// f at input index e (arity <= 64).
inline bool evaluate_index(const StructuredFunction& f, std::uint64_t e) {
  if (f.arity() > 64) throw InputShapeError("evaluate_index: arity > 64");
  if (f.arity() < 64 && (e >> f.arity()) != 0) throw InputShapeError("evaluate_index: index out of range");
  return detail::eval_index(f, e);
}

inline DenseTruthTable materialize(const StructuredFunction& f, const Limits& limits = {}) {
  if (f.arity() > limits.dense_cap) {
    throw CapacityError("materialize: arity " + std::to_string(f.arity()) + " exceeds dense cap",
                        static_cast<std::uint64_t>(limits.dense_cap));
  }
  if (const auto* d = f.as<DenseFn>()) return d->table;
  if (const auto* r = f.as<RestrictedFn>(); r && r->inner.arity() <= limits.dense_cap) {
    return restrict_table(materialize(r->inner, limits), r->rho);
  }
  if (const auto* ng = f.as<NegatedInputsFn>()) return materialize(ng->inner, limits).complement_inputs();
  return DenseTruthTable::from_function(
      f.arity(), [&](std::uint64_t e) { return detail::eval_index(f, e); }, limits.dense_cap);
}

inline StructuredFunction dense(DenseTruthTable t) { return StructuredFunction(DenseFn{std::move(t)}); }

/// f|rho; nested restrictions collapse into one restriction of the innermost function.
inline StructuredFunction restrict(const StructuredFunction& f, const Restriction& rho) {
  if (rho.arity() != f.arity()) {
    throw InputShapeError("restrict: restriction arity " + std::to_string(rho.arity()) + " != function arity " +
                          std::to_string(f.arity()));
  }
  if (const auto* r = f.as<RestrictedFn>()) return StructuredFunction(RestrictedFn{r->inner, r->rho.compose(rho)});
  return StructuredFunction(RestrictedFn{f, rho});
}

/// x -> f(~x). Applying it twice yields the original handle.
inline StructuredFunction negate_inputs(const StructuredFunction& f) {
  if (const auto* ng = f.as<NegatedInputsFn>()) return ng->inner;
  return StructuredFunction(NegatedInputsFn{f});
}

enum class Constancy { Constant0, Constant1, NonConstant };

namespace detail {

// Restricted Rubinstein base: accepting completions exist iff some block has no
// fixed 0 and every fixed 1 lies inside it. With a free cell present two
// completions differ in one bit, so both cannot accept (accepting inputs are
// 2b apart); with no free cell the value is the point value.
inline Constancy rubinstein_restricted_constancy(const RubinsteinBaseFn& g, const Restriction& rho) {
  bool can_accept = false;
  for (int blk = 0; blk < g.n && !can_accept; ++blk) {
    bool ok = true;
    for (int i = 0; i < g.b * g.n && ok; ++i) {
      const bool inside = i / g.b == blk;
      if (inside && rho[i] == Cell::Zero) ok = false;
      if (!inside && rho[i] == Cell::One) ok = false;
    }
    can_accept = ok;
  }
  if (!can_accept) return Constancy::Constant0;
  if (rho.free_count() > 0) return Constancy::NonConstant;
  return Constancy::Constant1;
}

}  // namespace detail

inline Constancy is_constant(const StructuredFunction& f, const Limits& limits = {}) {
  if (f.arity() <= limits.dense_cap) {
    const auto t = materialize(f, limits);
    if (t.is_const0()) return Constancy::Constant0;
    if (t.is_const1()) return Constancy::Constant1;
    return Constancy::NonConstant;
  }
  if (const auto* r = f.as<RestrictedFn>()) {
    if (const auto* g = r->inner.as<RubinsteinBaseFn>()) return detail::rubinstein_restricted_constancy(*g, r->rho);
  }
  throw CapacityError("is_constant: arity " + std::to_string(f.arity()) +
                          " exceeds dense cap and no structural rule applies",
                      static_cast<std::uint64_t>(limits.dense_cap));
}

}  // namespace bflab
