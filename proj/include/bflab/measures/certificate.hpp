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
#include <vector>

#include "bflab/measures/common.hpp"

namespace bflab {

struct CertificateResult {
  int value = 0;
  std::uint64_t witness = 0;  ///< mask of certified variables
};

namespace detail {

/// A < B in lexicographic order of sorted index lists (equal sizes assumed).
inline bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & diff & (~diff + 1)) != 0;
}

class CertificateScanner {
 public:
  explicit CertificateScanner(const DenseTruthTable& f) : f_(f), blocked_(f.size()) {}

  // S certifies x iff no differing input lies in the subcube, i.e. no
  // difference mask D with f(x ^ D) != f(x) avoids S. blocked_[T] records
  // whether such a D fits inside T.
  CertificateResult at(std::uint64_t x) {
    const bool v = f_.get(x);
    const std::size_t n = f_.size();
    for (std::size_t d = 0; d < n; ++d) blocked_[d] = f_.get(x ^ d) != v;
    subset_or(blocked_, f_.arity());
    const std::uint64_t all = n - 1;
    CertificateResult best{f_.arity() + 1, 0};
    for (std::uint64_t s = 0; s <= all; ++s) {
      if (blocked_[all & ~s]) continue;
      const int size = std::popcount(s);
      if (size < best.value || (size == best.value && lex_less(s, best.witness))) best = {size, s};
    }
    return best;
  }

 private:
  const DenseTruthTable& f_;
  std::vector<std::uint8_t> blocked_;
};

}  // namespace detail

/// Smallest certificate at x; ties broken by lexicographic order of the sorted positions.
inline CertificateResult certificate_at(const DenseTruthTable& f, std::uint64_t x, const Limits& limits = {}) {
  require_within(f.arity(), limits.cert_cap, "certificate complexity");
  return detail::CertificateScanner(f).at(x);
}

inline int certificate(const DenseTruthTable& f, ValueTag tag = ValueTag::All, const Limits& limits = {}) {
  require_within(f.arity(), limits.cert_cap, "certificate complexity");
  detail::CertificateScanner scanner(f);
  int best = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if (tag_admits(tag, f.get(x))) best = std::max(best, scanner.at(x).value);
  }
  return best;
}

/// f is constant on the subcube through x fixing `positions`.
inline bool certifies(const DenseTruthTable& f, std::uint64_t x, std::uint64_t positions) {
  const std::uint64_t free = (f.size() - 1) & ~positions;
  const std::uint64_t base = x & positions;
  const bool v = f.get(x);
  std::uint64_t s = 0;
  do {
    if (f.get(base | s) != v) return false;
    s = (s - free) & free;
  } while (s != 0);
  return true;
}

}  // namespace bflab
