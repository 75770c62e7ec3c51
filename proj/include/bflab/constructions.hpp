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
#include <span>
#include <string>

#include "bflab/function.hpp"
#include "bflab/measures/and_tree.hpp"
#include "bflab/measures/certificate.hpp"

namespace bflab {

/// Block size b, blocks per copy n, copies r.
struct RubinsteinParams {
  int b = 1;
  int n = 1;
  int r = 1;

  int base_arity() const noexcept { return b * n; }
  int arity() const noexcept { return r * b * n; }
};

/// g(x) = 1 iff exactly one aligned block of b variables is all ones and
/// every other variable is 0. Block j covers variables jb+1 .. jb+b (1-based).
inline StructuredFunction rubinstein_base(int b, int n) { return StructuredFunction(RubinsteinBaseFn{b, n}); }

/// OR of r copies of rubinstein_base(b, n) on consecutive groups of b*n variables.
inline StructuredFunction modified_rubinstein(int b, int n, int r) {
  return StructuredFunction(ModifiedRubinsteinFn{b, n, r});
}

inline StructuredFunction modified_rubinstein(const RubinsteinParams& p) { return modified_rubinstein(p.b, p.n, p.r); }

/// AND over n blocks of the OR of the block's n variables; block i is
/// variables (i-1)n+1 .. in.
inline StructuredFunction tribes(int n) { return StructuredFunction(TribesFn{n}); }

/// OR over n blocks of the AND of the block's n variables.
inline StructuredFunction dual_tribes(int n) { return StructuredFunction(DualTribesFn{n}); }

// Small dense reference functions.

inline StructuredFunction constant_function(int arity, bool value) { return dense(DenseTruthTable(arity, value)); }

inline StructuredFunction and_function(int arity) {
  const std::uint64_t all = (std::uint64_t{1} << arity) - 1;
  return dense(DenseTruthTable::from_function(arity, [all](std::uint64_t e) { return e == all; }));
}

inline StructuredFunction or_function(int arity) {
  return dense(DenseTruthTable::from_function(arity, [](std::uint64_t e) { return e != 0; }));
}

inline StructuredFunction parity_function(int arity) {
  return dense(DenseTruthTable::from_function(arity, [](std::uint64_t e) { return std::popcount(e) & 1; }));
}

inline StructuredFunction majority_function(int arity) {
  return dense(DenseTruthTable::from_function(arity, [arity](std::uint64_t e) { return 2 * std::popcount(e) > arity; }));
}

/// Checks a certificate claim against a small base function by subcube scan.
inline bool verify_certificate(const StructuredFunction& base, std::span<const std::uint8_t> x,
                               const CertificateClaim& claim, bool claimed_value, const Limits& limits = {}) {
  if (static_cast<int>(x.size()) != base.arity()) {
    throw InputShapeError("verify_certificate: input has " + std::to_string(x.size()) + " bits, base arity is " +
                          std::to_string(base.arity()));
  }
  return certificate_holds(materialize(base, limits), x, claim, claimed_value);
}

/// Spec for base_CS with c address copies; the certificate size is the
/// base's certificate complexity and pointers are ceil(log2 N) bits wide.
inline CheatSheetSpec make_cheat_sheet_spec(const StructuredFunction& base, int c, const Limits& limits = {}) {
  if (c < 1) throw InputShapeError("cheat sheet: c must be >= 1");
  if (c > 16) throw CapacityError("cheat sheet: 2^c cells", 16);
  CheatSheetSpec spec;
  spec.base = base;
  spec.base_table = materialize(base, limits);
  spec.c = c;
  spec.cert_size = std::max(1, certificate(spec.base_table, ValueTag::All, limits));
  spec.ptr_width = ceil_log2(static_cast<std::uint64_t>(base.arity()));
  spec.m = spec.cert_size * (spec.ptr_width + 1);
  return spec;
}

inline StructuredFunction cheat_sheet(const CheatSheetSpec& spec, const Limits& limits = {}) {
  const int n = spec.base_arity();
  if (spec.base.arity() != n) throw InputShapeError("cheat sheet: base table does not match base function");
  if (spec.c < 1 || spec.cert_size < 1) throw InputShapeError("cheat sheet: c and cert_size must be >= 1");
  if ((std::uint64_t{1} << spec.ptr_width) < static_cast<std::uint64_t>(n)) {
    throw InputShapeError("cheat sheet: pointer width cannot address every base position");
  }
  if (spec.m != spec.cert_size * (spec.ptr_width + 1)) throw InputShapeError("cheat sheet: m != cert_size*(ptr_width+1)");
  const int cert = certificate(spec.base_table, ValueTag::All, limits);
  if (cert != spec.cert_size && !(cert == 0 && spec.cert_size == 1)) {
    throw InputShapeError("cheat sheet: cert_size " + std::to_string(spec.cert_size) +
                          " != certificate complexity " + std::to_string(cert) + " of the base");
  }
  return StructuredFunction(CheatSheetFn{spec});
}

inline StructuredFunction cheat_sheet(const StructuredFunction& base, int c, const Limits& limits = {}) {
  return cheat_sheet(make_cheat_sheet_spec(base, c, limits), limits);
}

}  // namespace bflab
