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
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "bflab/errors.hpp"

namespace bflab {

/// Environment variable naming a config file when --config is absent.
inline constexpr const char* kConfigEnv = "BFLAB_CONFIG";

struct Config {
  Limits limits;
  std::uint64_t default_seed = 1;

  friend bool operator==(const Config& a, const Config& b) {
    return a.limits.dense_cap == b.limits.dense_cap && a.limits.bs_cap == b.limits.bs_cap &&
           a.limits.cert_cap == b.limits.cert_cap && a.limits.dt_cap == b.limits.dt_cap &&
           a.limits.andtree_cap == b.limits.andtree_cap &&
           a.limits.enumeration_budget == b.limits.enumeration_budget && a.default_seed == b.default_seed;
  }
};

inline nlohmann::json to_json(const Config& c) {
  return nlohmann::json{{"dense_cap", c.limits.dense_cap},   {"bs_cap", c.limits.bs_cap},
                        {"cert_cap", c.limits.cert_cap},     {"dt_cap", c.limits.dt_cap},
                        {"andtree_cap", c.limits.andtree_cap}, {"enumeration_budget", c.limits.enumeration_budget},
                        {"default_seed", c.default_seed}};
}

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::uint64_t parse_config_uint(const std::string& v, int line) {
  std::uint64_t out = 0;
  const auto* end = v.data() + v.size();
  const auto [p, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || p != end) {
    throw ConfigError("config line " + std::to_string(line) + ": '" + v + "' is not a non-negative integer");
  }
  return out;
}

}  // namespace detail

/// Reads "key = value" lines; '#' starts a comment. Missing keys keep
/// their defaults. Every cap must be at least 1.
inline Config parse_config(std::istream& in) {
  Config c;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string text = detail::trim(raw);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(line) + ": expected key = value");
    const std::string key = detail::trim(std::string_view(text).substr(0, eq));
    const std::string val = detail::trim(std::string_view(text).substr(eq + 1));
    const std::uint64_t v = detail::parse_config_uint(val, line);
    auto cap = [&](int& field) {
      if (v < 1) throw ConfigError("config line " + std::to_string(line) + ": " + key + " must be >= 1");
      if (v > 64) throw ConfigError("config line " + std::to_string(line) + ": " + key + " must be <= 64");
      field = static_cast<int>(v);
    };
    if (key == "dense_cap") {
      cap(c.limits.dense_cap);
    } else if (key == "bs_cap") {
      cap(c.limits.bs_cap);
    } else if (key == "cert_cap") {
      cap(c.limits.cert_cap);
    } else if (key == "dt_cap") {
      cap(c.limits.dt_cap);
    } else if (key == "andtree_cap") {
      cap(c.limits.andtree_cap);
    } else if (key == "enumeration_budget") {
      if (v < 1) throw ConfigError("config line " + std::to_string(line) + ": enumeration_budget must be >= 1");
      c.limits.enumeration_budget = v;
    } else if (key == "default_seed") {
      c.default_seed = v;
    } else {
      throw ConfigError("config line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  return c;
}

/// Loads `path`; with no path, falls back to $BFLAB_CONFIG, then to defaults.
inline Config load_config(const std::optional<std::string>& path = std::nullopt) {
  std::optional<std::string> p = path;
  if (!p) {
    if (const char* env = std::getenv(kConfigEnv); env && *env) p = env;
  }
  if (!p) return Config{};
  std::ifstream in(*p);
  if (!in) throw ConfigError("cannot open config file '" + *p + "'");
  return parse_config(in);
}

}  // namespace bflab
