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

#include <charconv>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bflab/constructions.hpp"

namespace bflab {

/// A parsed family literal such as "modrub:2,2,2" or "cs:tribes:2,2".
struct FamilyLiteral {
  std::string family;
  std::vector<int> params;
  StructuredFunction function;

  nlohmann::json descriptor() const { return {{"family", family}, {"params", params}}; }
};

namespace detail {

inline std::vector<int> parse_int_list(std::string_view s, std::string_view literal) {
  std::vector<int> out;
  while (true) {
    const auto comma = s.find(',');
    const auto tok = s.substr(0, comma);
    int v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size() || v < 0) {
      throw UsageError("bad parameter '" + std::string(tok) + "' in '" + std::string(literal) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

/// Families: rub:b,n  modrub:b,n,r  tribes:n  dualtribes:n  cs:tribes:n,c
/// and the small references and:k  or:k  parity:k  maj:k  const:k,v.
inline FamilyLiteral parse_family(std::string_view literal, const Limits& limits = {}) {
  const auto colon = literal.find(':');
  if (colon == std::string_view::npos) throw UsageError("family literal '" + std::string(literal) + "' has no ':'");
  FamilyLiteral out;
  out.family = std::string(literal.substr(0, colon));
  std::string_view rest = literal.substr(colon + 1);
  if (out.family == "cs") {
    const auto c2 = rest.find(':');
    if (c2 == std::string_view::npos || rest.substr(0, c2) != "tribes") {
      throw UsageError("cheat-sheet literal must be cs:tribes:n,c");
    }
    out.family = "cs:tribes";
    rest.remove_prefix(c2 + 1);
  }
  out.params = detail::parse_int_list(rest, literal);
  auto want = [&](std::size_t k) {
    if (out.params.size() != k) {
      throw UsageError("'" + out.family + "' takes " + std::to_string(k) + " parameter(s), got " +
                       std::to_string(out.params.size()));
    }
    for (int p : out.params) {
      if (p < 1 && !(out.family == "const")) throw UsageError("family parameters must be >= 1");
    }
  };
  const auto& p = out.params;
  if (out.family == "rub") {
    want(2);
    out.function = rubinstein_base(p[0], p[1]);
  } else if (out.family == "modrub") {
    want(3);
    out.function = modified_rubinstein(p[0], p[1], p[2]);
  } else if (out.family == "tribes") {
    want(1);
    out.function = tribes(p[0]);
  } else if (out.family == "dualtribes") {
    want(1);
    out.function = dual_tribes(p[0]);
  } else if (out.family == "cs:tribes") {
    want(2);
    out.function = cheat_sheet(tribes(p[0]), p[1], limits);
  } else if (out.family == "and" || out.family == "or" || out.family == "parity" || out.family == "maj") {
    want(1);
    require_within(p[0], limits.dense_cap, "reference function");
    out.function = out.family == "and"      ? and_function(p[0])
                   : out.family == "or"     ? or_function(p[0])
                   : out.family == "parity" ? parity_function(p[0])
                                            : majority_function(p[0]);
  } else if (out.family == "const") {
    want(2);
    if (p[1] > 1) throw UsageError("const:k,v needs v in {0,1}");
    require_within(p[0], limits.dense_cap, "reference function");
    out.function = constant_function(p[0], p[1] == 1);
  } else {
    throw UsageError("unknown family '" + out.family + "'");
  }
  return out;
}

/// A family literal, or else the path of a truth-table file.
inline FamilyLiteral load_function(const std::string& spec, const Limits& limits = {}) {
  if (spec.find(':') != std::string::npos) {
    std::ifstream probe(spec);
    if (!probe) return parse_family(spec, limits);
  }
  std::ifstream in(spec);
  if (!in) throw UsageError("'" + spec + "' is neither a family literal nor a readable table file");
  FamilyLiteral out;
  out.function = dense(read_table_file(in, limits.dense_cap));
  out.family = "table";
  out.params = {out.function.arity()};
  return out;
}

}  // namespace bflab
