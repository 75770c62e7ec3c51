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

// Command-line front end. Kept in a header so tests can drive it in-process.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "bflab/claims.hpp"
#include "bflab/family_literal.hpp"

namespace bflab {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitCapacity = 3 };

namespace detail {

inline nlohmann::json mask_to_vars(std::uint64_t mask) {
  auto out = nlohmann::json::array();
  for (std::uint64_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

inline nlohmann::json tree_to_json(const AndDecisionTree& t, int at = 0) {
  const auto& nd = t.nodes[static_cast<std::size_t>(at)];
  if (nd.is_leaf()) return {{"output", nd.output ? 1 : 0}};
  return {{"query", mask_to_vars(nd.query)}, {"if0", tree_to_json(t, nd.child0)}, {"if1", tree_to_json(t, nd.child1)}};
}

/// Pointwise witnesses for s, bs and C at input x.
inline nlohmann::json point_witness(const DenseTruthTable& f, MeasureKind kind, std::uint64_t x, const Limits& lim) {
  switch (kind.measure) {
    case Measure::Sensitivity: {
      auto vars = nlohmann::json::array();
      for (int i = 0; i < f.arity(); ++i) {
        if (f.get(x) != f.get(x ^ (std::uint64_t{1} << i))) vars.push_back(i + 1);
      }
      return {{"point", format_bits(bits_of(x, f.arity()))}, {"sensitive", vars}};
    }
    case Measure::BlockSensitivity: {
      const auto r = block_sensitivity_at(f, x, lim);
      auto blocks = nlohmann::json::array();
      for (auto b : r.witness.blocks) blocks.push_back(mask_to_vars(b));
      return {{"point", format_bits(bits_of(x, f.arity()))}, {"blocks", blocks}};
    }
    case Measure::Certificate: {
      const auto r = certificate_at(f, x, lim);
      return {{"point", format_bits(bits_of(x, f.arity()))}, {"positions", mask_to_vars(r.witness)}};
    }
    default: return nullptr;
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

}  // namespace detail

/// Runs the bflab command line and returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Boolean function complexity laboratory", "bflab"};
  app.fallthrough();
  app.require_subcommand(1);

  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  std::string format = "json";
  bool strict = false;
  app.add_option("--config", config_path, "Config file (default: $BFLAB_CONFIG, then built-in defaults)");
  app.add_option("--seed", seed, "Seed for sampled checks (overrides default_seed)");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Report format: json, csv or markdown");
  app.add_flag("--strict", strict, "Exit 3 when any check was skipped for capacity");

  // measure
  auto* measure = app.add_subcommand("measure", "Compute one complexity measure");
  std::string m_fn;
  std::string m_kind;
  std::string m_tag;
  std::string m_at;
  bool m_witness = false;
  measure->add_option("--fn", m_fn, "Family literal or table file")->required();
  measure->add_option("--kind", m_kind, "s, bs, C, D, dqc0, dqc1, dqc_and, dqc_or, sparsity, deg")->required();
  measure->add_option("--tag", m_tag, "Restrict to zeros or ones");
  measure->add_option("--at", m_at, "Input bit string (variable 1 first)");
  measure->add_flag("--witness", m_witness, "Include a witness");

  // build
  auto* build = app.add_subcommand("build", "Materialize a function to a table file");
  std::string b_fn;
  std::string b_out;
  build->add_option("--fn", b_fn, "Family literal or table file")->required();
  build->add_option("--out", b_out, "Output path (default stdout)");

  // restrict
  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict a function and write its table");
  std::string r_fn;
  std::string r_rho;
  std::string r_out;
  restrict_cmd->add_option("--fn", r_fn, "Family literal or table file")->required();
  restrict_cmd->add_option("--rho", r_rho, "Restriction over {0,1,*}, variable 1 first")->required();
  restrict_cmd->add_option("--out", r_out, "Output path (default stdout)");

  // condense
  auto* condense = app.add_subcommand("condense", "Maximize a measure over restrictions");
  std::string c_fn;
  std::string c_measure;
  std::string c_tag;
  std::vector<int> c_free;
  bool c_exhaustive = false;
  std::string c_sample;
  condense->add_option("--fn", c_fn, "Family literal or table file")->required();
  condense->add_option("--measure", c_measure, "Measure name")->required();
  condense->add_option("--tag", c_tag, "Restrict to zeros or ones");
  condense->add_option("--free", c_free, "Free-variable budget(s); several give a profile")->required()->delimiter(',');
  auto* ex_flag = condense->add_flag("--exhaustive", c_exhaustive, "Enumerate every restriction (default)");
  condense->add_option("--sample", c_sample, "Seeded sample: <seed>:<trials> or <trials>")->excludes(ex_flag);

  // verify
  auto* verify = app.add_subcommand("verify", "Run claim suites");
  std::string v_claim;
  std::string v_params;
  std::string v_out;
  verify->add_option("--claim", v_claim, "Suite id or 'all'")->required();
  verify->add_option("--params", v_params, "Suite parameters, e.g. k=2,n=3");
  verify->add_option("--out", v_out, "Report path (default stdout)");

  // game
  auto* game = app.add_subcommand("game", "Play a query game");
  std::string g_kind;
  int g_n = 2;
  int g_c = 2;
  std::string g_querier;
  std::string g_input;
  std::string g_emit;
  game->add_option("--kind", g_kind, "tribes or cheatsheet")->required()->check(CLI::IsMember({"tribes", "cheatsheet"}));
  game->add_option("--n", g_n, "Tribes size n")->check(CLI::PositiveNumber);
  game->add_option("--c", g_c, "Cheat-sheet copies c")->check(CLI::PositiveNumber);
  game->add_option("--querier", g_querier, "greedy, and-strategy (tribes default), cell-scan or exhaustive; cheatsheet defaults to greedy");
  game->add_option("--input", g_input, "Hidden input for a truthful responder (default: the adversary)");
  game->add_option("--emit", g_emit, "Transcript path (default stdout)");

  // export
  auto* exp = app.add_subcommand("export", "Convert a JSON report file");
  std::string e_in;
  std::string e_out;
  exp->add_option("--in", e_in, "JSON reports from verify")->required();
  exp->add_option("--out", e_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream er;
    const int rc = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    Config cfg = load_config(config_path);
    if (seed) cfg.default_seed = *seed;
    const Limits& lim = cfg.limits;
    const ExportFormat fmt = parse_format(format);

    if (*measure) {
      const auto fn = load_function(m_fn, lim);
      const MeasureKind kind(parse_measure(m_kind), parse_tag(m_tag));
      const auto f = materialize(fn.function, lim);
      nlohmann::json j{{"kind", to_string(kind)}, {"function", fn.descriptor()}};
      if (!m_at.empty()) {
        const auto x = parse_bits(m_at);
        if (static_cast<int>(x.size()) != f.arity()) {
          throw InputShapeError("--at has " + std::to_string(x.size()) + " bits, function arity is " +
                                std::to_string(f.arity()));
        }
        j["at"] = m_at;
        j["value"] = compute_measure_at(f, kind, index_of(x), lim);
        if (m_witness) j["witness"] = detail::point_witness(f, kind, index_of(x), lim);
      } else if (kind.measure == Measure::AndDTDepth && m_witness) {
        const auto r = and_dt_depth_exact(f, lim);
        j["value"] = r.depth;
        j["witness"] = detail::tree_to_json(r.witness);
      } else {
        j["value"] = compute_measure(f, kind, lim);
        if (m_witness) {
          if (kind.measure == Measure::Sensitivity || kind.measure == Measure::BlockSensitivity ||
              kind.measure == Measure::Certificate) {
            const int target = j["value"].get<int>();
            for (std::uint64_t e = 0; e < f.size(); ++e) {
              if (tag_admits(kind.tag, f.get(e)) && compute_measure_at(f, kind, e, lim) == target) {
                j["witness"] = detail::point_witness(f, kind, e, lim);
                break;
              }
            }
          } else {
            j["witness"] = nullptr;
          }
        }
      }
      out << j.dump(2) << "\n";
      return kExitPass;
    }

    if (*build) {
      const auto fn = load_function(b_fn, lim);
      detail::write_output(b_out, table_file_string(materialize(fn.function, lim)), out);
      return kExitPass;
    }

    if (*restrict_cmd) {
      const auto fn = load_function(r_fn, lim);
      const auto rho = Restriction::parse(r_rho);
      detail::write_output(r_out, table_file_string(materialize(restrict(fn.function, rho), lim)), out);
      return kExitPass;
    }

    if (*condense) {
      const auto fn = load_function(c_fn, lim);
      const MeasureKind kind(parse_measure(c_measure), parse_tag(c_tag));
      std::optional<SampleSpec> sample;
      if (!c_sample.empty()) {
        SampleSpec s{cfg.default_seed, 1};
        try {
          if (const auto colon = c_sample.find(':'); colon != std::string::npos) {
            s.seed = std::stoull(c_sample.substr(0, colon));
            s.trials = std::stoull(c_sample.substr(colon + 1));
          } else {
            s.trials = std::stoull(c_sample);
          }
        } catch (const std::exception&) {
          throw UsageError("--sample expects <seed>:<trials> or <trials>");
        }
        sample = s;
      }
      const auto rows = condensation_profile(fn.function, kind, c_free, sample, lim, jobs);
      nlohmann::json j{{"function", fn.descriptor()}, {"measure", to_string(kind)}, {"rows", nlohmann::json::array()}};
      int rc = kExitPass;
      for (const auto& row : rows) {
        nlohmann::json r{{"free", row.budget}};
        if (row.result) {
          r["value"] = row.result->value;
          r["witness"] = row.result->witness.to_string();
          r["mode"] = row.result->mode_label();
          r["examined"] = row.result->examined;
        } else {
          r["error"] = row.error;
          rc = std::max<int>(rc, row.error.find("(cap ") != std::string::npos ? kExitCapacity : kExitUsage);
        }
        j["rows"].push_back(r);
      }
      out << j.dump(2) << "\n";
      return rc;
    }

    if (*verify) {
      const auto reports = run_claim_suite(v_claim, parse_suite_params(v_params), cfg, jobs);
      detail::write_output(v_out, export_reports(reports, fmt), out);
      if (!all_passed(reports)) return kExitFail;
      if (strict && any_skipped(reports)) return kExitCapacity;
      return kExitPass;
    }

    if (*game) {
      nlohmann::json j;
      if (g_querier.empty()) g_querier = g_kind == "tribes" ? "and-strategy" : "greedy";
      if (g_kind == "tribes") {
        const auto f = materialize(tribes(g_n), lim);
        std::unique_ptr<Querier> q;
        if (g_querier == "and-strategy" || g_querier == "paper") {
          q = std::make_unique<TribesAndStrategy>(g_n);
        } else if (g_querier == "greedy") {
          std::vector<int> order(static_cast<std::size_t>(g_n * g_n));
          std::iota(order.begin(), order.end(), 1);
          q = std::make_unique<SequentialQuerier>(f, order);
        } else if (g_querier == "exhaustive") {
          q = std::make_unique<MinimaxQuerier>(f, 1, 0, lim);
        } else {
          throw UsageError("tribes querier must be greedy, and-strategy or exhaustive");
        }
        std::unique_ptr<Responder> resp;
        if (g_input.empty()) {
          resp = std::make_unique<TribesAdversary>(g_n);
        } else {
          auto x = parse_bits(g_input);
          if (static_cast<int>(x.size()) != g_n * g_n) throw InputShapeError("--input must have n^2 bits");
          resp = std::make_unique<TruthfulResponder>(std::move(x));
        }
        j = play(*q, *resp, g_n * g_n + 1);
      } else {
        CheatSheetAdversary proto(g_n, g_c, lim);
        const auto& spec = proto.spec();
        if (g_querier == "exhaustive") {
          nlohmann::json lengths = nlohmann::json::array();
          for (int len = 0; len < g_n * g_n; ++len) {
            const auto rep = exhaustive_short_sequences(g_n, g_c, len, lim);
            lengths.push_back({{"length", len},
                               {"sequences", rep.sequences},
                               {"determined", rep.determined},
                               {"dichotomy_failures", rep.dichotomy_failures}});
          }
          j = {{"querier", "exhaustive"}, {"lengths", lengths}};
        } else {
          std::unique_ptr<Querier> q;
          if (g_querier == "greedy") {
            q = std::make_unique<CopiesFirstQuerier>(spec);
          } else if (g_querier == "cell-scan") {
            q = std::make_unique<CellScanQuerier>(spec);
          } else {
            throw UsageError("cheatsheet querier must be greedy, cell-scan or exhaustive");
          }
          std::unique_ptr<Responder> resp;
          if (g_input.empty()) {
            resp = std::make_unique<CheatSheetAdversary>(g_n, g_c, lim);
          } else {
            auto x = parse_bits(g_input);
            if (x.size() != spec.arity()) throw InputShapeError("--input must have " + std::to_string(spec.arity()) + " bits");
            resp = std::make_unique<TruthfulResponder>(std::move(x));
          }
          const auto t = play(*q, *resp, static_cast<int>(spec.arity()));
          const auto d = analyze_cheatsheet_transcript(spec, t, lim);
          j = t;
          j["analysis"] = {{"copy_queries", d.copy_queries},
                           {"cell_touches", d.cell_touches},
                           {"copy_case", d.copy_case},
                           {"flip_case", d.flip_case()}};
        }
      }
      detail::write_output(g_emit, j.dump(2) + "\n", out);
      return kExitPass;
    }

    if (*exp) {
      const auto reports = parse_reports_json(detail::read_file(e_in));
      detail::write_output(e_out, export_reports(reports, fmt), out);
      return kExitPass;
    }
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ConfigError& e) {
    err << "config: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ProtocolError& e) {
    err << "protocol: " << e.what() << "\n";
    return kExitFail;
  } catch (const nlohmann::json::exception& e) {
    err << "json: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bflab
