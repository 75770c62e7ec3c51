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
#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bflab/errors.hpp"

namespace bflab {

enum class ClaimStatus { Pass, Fail, NoCounterexample, Skipped };

inline std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "Pass";
    case ClaimStatus::Fail: return "Fail";
    case ClaimStatus::NoCounterexample: return "NoCounterexample";
    case ClaimStatus::Skipped: return "Skipped";
  }
  return "?";
}

inline ClaimStatus parse_status(const std::string& s) {
  if (s == "Pass") return ClaimStatus::Pass;
  if (s == "Fail") return ClaimStatus::Fail;
  if (s == "NoCounterexample") return ClaimStatus::NoCounterexample;
  if (s == "Skipped") return ClaimStatus::Skipped;
  throw InputShapeError("unknown claim status '" + s + "'");
}

/// A universally quantified check only earns Pass when the whole space was examined.
inline ClaimStatus status_for(bool holds, bool exhaustive) {
  if (!holds) return ClaimStatus::Fail;
  return exhaustive ? ClaimStatus::Pass : ClaimStatus::NoCounterexample;
}

/// Verdict binding one checked claim to its parameters and observations.
struct ClaimReport {
  std::string claim_id;
  std::string claim_ref;
  std::map<std::string, std::string> params;
  std::string expected;
  std::string observed;
  ClaimStatus status = ClaimStatus::Skipped;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::int64_t runtime_ms = 0;
  nlohmann::json details = nlohmann::json::object();
  nlohmann::json config = nlohmann::json::object();

  std::string mode_label() const {
    return exhaustive ? "Exhaustive" : "Sampled(" + std::to_string(seed) + "," + std::to_string(trials) + ")";
  }

  std::string params_label() const {
    std::string s;
    for (const auto& [k, v] : params) {
      if (!s.empty()) s += ';';
      s += k + "=" + v;
    }
    return s;
  }
};

inline void to_json(nlohmann::json& j, const ClaimReport& r) {
  j = nlohmann::json{{"claim_id", r.claim_id},
                     {"claim_ref", r.claim_ref},
                     {"params", r.params},
                     {"expected", r.expected},
                     {"observed", r.observed},
                     {"status", to_string(r.status)},
                     {"mode", r.exhaustive ? "Exhaustive" : "Sampled"},
                     {"seed", r.seed},
                     {"trials", r.trials},
                     {"runtime_ms", r.runtime_ms},
                     {"details", r.details},
                     {"config", r.config}};
}

inline void from_json(const nlohmann::json& j, ClaimReport& r) {
  r.claim_id = j.at("claim_id").get<std::string>();
  r.claim_ref = j.at("claim_ref").get<std::string>();
  r.params = j.at("params").get<std::map<std::string, std::string>>();
  r.expected = j.at("expected").get<std::string>();
  r.observed = j.at("observed").get<std::string>();
  r.status = parse_status(j.at("status").get<std::string>());
  r.exhaustive = j.at("mode").get<std::string>() == "Exhaustive";
  r.seed = j.value("seed", std::uint64_t{0});
  r.trials = j.value("trials", std::uint64_t{0});
  r.runtime_ms = j.value("runtime_ms", std::int64_t{0});
  r.details = j.value("details", nlohmann::json::object());
  r.config = j.value("config", nlohmann::json::object());
}

/// Sorted by claim id, then parameters.
inline void sort_reports(std::vector<ClaimReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const ClaimReport& a, const ClaimReport& b) {
    if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
    return a.params < b.params;
  });
}

enum class ExportFormat { Json, Csv, Markdown };

inline ExportFormat parse_format(const std::string& s) {
  if (s == "json") return ExportFormat::Json;
  if (s == "csv") return ExportFormat::Csv;
  if (s == "markdown" || s == "md") return ExportFormat::Markdown;
  throw UsageError("unknown format '" + s + "' (expected json|csv|markdown)");
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string md_field(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

inline std::vector<std::string> flat_row(const ClaimReport& r) {
  return {r.claim_id, r.claim_ref, r.params_label(), r.expected, r.observed,
          to_string(r.status), r.mode_label(), std::to_string(r.runtime_ms)};
}

inline const std::vector<std::string>& flat_header() {
  static const std::vector<std::string> h{"claim_id", "claim_ref", "params", "expected",
                                          "observed", "status", "mode", "runtime_ms"};
  return h;
}

}  // namespace detail

/// JSON is lossless; CSV and markdown flatten params and omit details.
inline std::string export_reports(const std::vector<ClaimReport>& reports, ExportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ExportFormat::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(r);
      os << arr.dump(2) << '\n';
      break;
    }
    case ExportFormat::Csv: {
      const auto& h = detail::flat_header();
      for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
      os << '\n';
      for (const auto& r : reports) {
        const auto row = detail::flat_row(r);
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << detail::csv_field(row[i]);
        os << '\n';
      }
      break;
    }
    case ExportFormat::Markdown: {
      const auto& h = detail::flat_header();
      os << '|';
      for (const auto& c : h) os << ' ' << c << " |";
      os << "\n|";
      for (std::size_t i = 0; i < h.size(); ++i) os << " --- |";
      os << '\n';
      for (const auto& r : reports) {
        os << '|';
        for (const auto& c : detail::flat_row(r)) os << ' ' << detail::md_field(c) << " |";
        os << '\n';
      }
      break;
    }
  }
  return os.str();
}

inline std::vector<ClaimReport> parse_reports_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  return j.get<std::vector<ClaimReport>>();
}

}  // namespace bflab
