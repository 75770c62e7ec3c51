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

#include <array>
#include <string>
#include <string_view>

#include "bflab/function.hpp"
#include "bflab/measures/and_tree.hpp"
#include "bflab/measures/block_sensitivity.hpp"
#include "bflab/measures/certificate.hpp"
#include "bflab/measures/common.hpp"
#include "bflab/measures/decision_tree.hpp"
#include "bflab/measures/fourier.hpp"

namespace bflab {

enum class Measure {
  Sensitivity,
  BlockSensitivity,
  Certificate,
  DTDepth,
  ZeroDepth,
  OneDepth,
  AndDTDepth,
  OrDTDepth,
  FourierSparsity,
  Degree,
};

struct MeasureKind {
  Measure measure = Measure::Sensitivity;
  ValueTag tag = ValueTag::All;

  MeasureKind() = default;
  MeasureKind(Measure m, ValueTag t = ValueTag::All) : measure(m), tag(t) {  // NOLINT
    if (t != ValueTag::All && m != Measure::Sensitivity && m != Measure::BlockSensitivity &&
        m != Measure::Certificate) {
      throw UsageError("value tags apply only to sensitivity, block sensitivity and certificate");
    }
  }
  friend bool operator==(const MeasureKind&, const MeasureKind&) = default;
};

namespace detail {
struct MeasureName {
  Measure measure;
  std::string_view name;
};
inline constexpr std::array<MeasureName, 10> kMeasureNames{{
    {Measure::Sensitivity, "s"},
    {Measure::BlockSensitivity, "bs"},
    {Measure::Certificate, "C"},
    {Measure::DTDepth, "D"},
    {Measure::ZeroDepth, "dqc0"},
    {Measure::OneDepth, "dqc1"},
    {Measure::AndDTDepth, "dqc_and"},
    {Measure::OrDTDepth, "dqc_or"},
    {Measure::FourierSparsity, "sparsity"},
    {Measure::Degree, "deg"},
}};
}  // namespace detail

inline std::string to_string(MeasureKind k) {
  std::string s;
  for (const auto& e : detail::kMeasureNames) {
    if (e.measure == k.measure) s = e.name;
  }
  if (k.tag == ValueTag::OnZeros) s += "0";
  if (k.tag == ValueTag::OnOnes) s += "1";
  return s;
}

/// Accepts the short names above plus a few spelled-out aliases.
inline Measure parse_measure(std::string_view name) {
  for (const auto& e : detail::kMeasureNames) {
    if (e.name == name) return e.measure;
  }
  struct Alias {
    std::string_view name;
    Measure measure;
  };
  static constexpr std::array<Alias, 13> kAliases{{
      {"sensitivity", Measure::Sensitivity},
      {"block-sensitivity", Measure::BlockSensitivity},
      {"certificate", Measure::Certificate},
      {"c", Measure::Certificate},
      {"dt", Measure::DTDepth},
      {"depth", Measure::DTDepth},
      {"zero-depth", Measure::ZeroDepth},
      {"one-depth", Measure::OneDepth},
      {"and-depth", Measure::AndDTDepth},
      {"or-depth", Measure::OrDTDepth},
      {"fourier-sparsity", Measure::FourierSparsity},
      {"degree", Measure::Degree},
      {"d", Measure::DTDepth},
  }};
  for (const auto& a : kAliases) {
    if (a.name == name) return a.measure;
  }
  throw UsageError("unknown measure '" + std::string(name) + "'");
}

inline ValueTag parse_tag(std::string_view s) {
  if (s.empty() || s == "all") return ValueTag::All;
  if (s == "zeros" || s == "0") return ValueTag::OnZeros;
  if (s == "ones" || s == "1") return ValueTag::OnOnes;
  throw UsageError("unknown tag '" + std::string(s) + "' (expected zeros|ones)");
}

/// Aggregate value of a measure on a dense function.
inline int compute_measure(const DenseTruthTable& f, MeasureKind kind, const Limits& limits = {}) {
  switch (kind.measure) {
    case Measure::Sensitivity: return sensitivity(f, kind.tag, limits);
    case Measure::BlockSensitivity: return block_sensitivity(f, kind.tag, limits);
    case Measure::Certificate: return certificate(f, kind.tag, limits);
    case Measure::DTDepth: return dt_depth(f, limits);
    case Measure::ZeroDepth: return zero_depth(f, limits);
    case Measure::OneDepth: return one_depth(f, limits);
    case Measure::AndDTDepth: return AndTreeSolver(f.arity(), limits).depth(f);
    case Measure::OrDTDepth: return or_dt_depth_exact(f, limits);
    case Measure::FourierSparsity: return fourier_sparsity(f, limits);
    case Measure::Degree: return degree(f, limits);
  }
  return 0;
}

inline int compute_measure(const StructuredFunction& f, MeasureKind kind, const Limits& limits = {}) {
  return compute_measure(materialize(f, limits), kind, limits);
}

/// Point measures: defined for s, bs and C only.
inline int compute_measure_at(const DenseTruthTable& f, MeasureKind kind, std::uint64_t x, const Limits& limits = {}) {
  switch (kind.measure) {
    case Measure::Sensitivity: return sensitivity_at(f, x);
    case Measure::BlockSensitivity: return block_sensitivity_value_at(f, x, limits);
    case Measure::Certificate: return certificate_at(f, x, limits).value;
    default: throw UsageError("measure " + to_string(kind) + " has no pointwise form");
  }
}

}  // namespace bflab
