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
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "bflab/condense.hpp"
#include "bflab/config.hpp"
#include "bflab/games.hpp"
#include "bflab/measures.hpp"
#include "bflab/report.hpp"

namespace bflab {

using SuiteParams = std::map<std::string, std::string>;

inline const std::vector<std::string>& claim_catalog() {
  static const std::vector<std::string> ids{"AND-SANDWICH", "CS-ADV",  "DUAL",      "INCOND",    "MONOTONE",
                                            "OPT-EXP",      "RUB-BS",  "RUB-CERT",  "RUB-LEMMA", "TRIBES-D0"};
  return ids;
}

/// Parses "k=2,n=3" (also accepts ';' separators).
inline SuiteParams parse_suite_params(std::string_view s) {
  SuiteParams out;
  while (!s.empty()) {
    const auto sep = s.find_first_of(",;");
    const auto tok = s.substr(0, sep);
    if (!tok.empty()) {
      const auto eq = tok.find('=');
      if (eq == std::string_view::npos || eq == 0) throw UsageError("bad suite parameter '" + std::string(tok) + "'");
      out[std::string(tok.substr(0, eq))] = std::string(tok.substr(eq + 1));
    }
    if (sep == std::string_view::npos) break;
    s.remove_prefix(sep + 1);
  }
  return out;
}

namespace detail {

inline int param_int(const SuiteParams& p, const std::string& key, int fallback) {
  const auto it = p.find(key);
  if (it == p.end()) return fallback;
  try {
    std::size_t used = 0;
    const int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw UsageError("parameter " + key + "='" + it->second + "' is not an integer");
  }
}

inline std::uint64_t param_u64(const SuiteParams& p, const std::string& key, std::uint64_t fallback) {
  const auto it = p.find(key);
  if (it == p.end()) return fallback;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw UsageError("parameter " + key + "='" + it->second + "' is not a non-negative integer");
  }
}

inline void allow_params(const SuiteParams& p, std::initializer_list<const char*> keys, const std::string& suite) {
  for (const auto& [k, v] : p) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
      throw UsageError("suite " + suite + " does not take parameter '" + k + "'");
    }
  }
}

inline ClaimReport make_report(std::string id, std::string ref, SuiteParams params, std::string expected,
                               std::string observed, ClaimStatus status) {
  ClaimReport r;
  r.claim_id = std::move(id);
  r.claim_ref = std::move(ref);
  r.params = std::move(params);
  r.expected = std::move(expected);
  r.observed = std::move(observed);
  r.status = status;
  return r;
}

inline ClaimReport equality_report(std::string id, std::string ref, SuiteParams params, std::int64_t expected,
                                   std::int64_t observed) {
  return make_report(std::move(id), std::move(ref), std::move(params), "= " + std::to_string(expected),
                     std::to_string(observed), expected == observed ? ClaimStatus::Pass : ClaimStatus::Fail);
}

using ClaimTask = std::function<std::vector<ClaimReport>()>;

/// A task that trips a cap yields one Skipped report instead of failing the suite.
inline ClaimTask guarded(std::string id, std::string ref, SuiteParams params, ClaimTask body) {
  return [id = std::move(id), ref = std::move(ref), params = std::move(params), body = std::move(body)]() {
    try {
      return body();
    } catch (const CapacityError& e) {
      auto r = make_report(id, ref, params, "-", "-", ClaimStatus::Skipped);
      r.details = {{"reason", e.what()}};
      return std::vector<ClaimReport>{r};
    }
  };
}

}  // namespace detail

// Report-producing verifiers for the restriction bounds.

inline ClaimReport verify_base_restriction_lemmas(int b, int n, const Limits& limits = {}) {
  const auto chk = check_base_restriction_lemmas(b, n, limits);
  auto r = detail::make_report(
      "RUB-LEMMA", "0-certificate and 0-block-sensitivity of restricted base function",
      {{"b", std::to_string(b)}, {"n", std::to_string(n)}},
      "C0(g|rho) <= max(2, r/b) and bs0(g|rho) <= max(1, r/b) for every non-constant rho",
      std::to_string(chk.restrictions) + " restrictions, " + std::to_string(chk.c0_violations.size() + chk.bs0_violations.size()) +
          " violations",
      status_for(chk.holds(), true));
  nlohmann::json viol = nlohmann::json::array();
  for (const auto& v : chk.c0_violations) viol.push_back({{"rho", v.rho.to_string()}, {"C0", v.c0}, {"bs0", v.bs0}});
  for (const auto& v : chk.bs0_violations) viol.push_back({{"rho", v.rho.to_string()}, {"C0", v.c0}, {"bs0", v.bs0}});
  r.details = {{"restrictions", chk.restrictions},
               {"nonconstant", chk.nonconstant},
               {"max_C0", chk.max_c0},
               {"max_bs0", chk.max_bs0},
               {"violations", viol}};
  return r;
}

inline ClaimReport verify_incondensability(const RubinsteinParams& p, int free_budget, Measure measure,
                                           std::optional<SampleSpec> sample = std::nullopt, const Limits& limits = {},
                                           int jobs = 1, int exhaustive_arity = 9) {
  const auto chk = check_incondensability(p, free_budget, measure, sample, limits, jobs, exhaustive_arity);
  const std::string m = measure == Measure::Certificate ? "C" : "bs";
  auto r = detail::make_report(
      "INCOND",
      measure == Measure::Certificate ? "certificate complexity of restrictions of modified Rubinstein"
                                      : "block sensitivity of restrictions of modified Rubinstein",
      {{"b", std::to_string(p.b)},
       {"n", std::to_string(p.n)},
       {"r", std::to_string(p.r)},
       {"t", std::to_string(free_budget)},
       {"measure", m}},
      m + "(f|rho) <= " + chk.bound.to_string(), "max " + std::to_string(chk.max_observed),
      status_for(chk.holds(), chk.exhaustive));
  r.exhaustive = chk.exhaustive;
  if (!chk.exhaustive) {
    r.seed = chk.sample.seed;
    r.trials = chk.sample.trials;
  }
  r.details = {{"bound", chk.bound.to_string()},
               {"max_observed", chk.max_observed},
               {"witness", chk.witness.to_string()},
               {"examined", chk.examined},
               {"violations", chk.violations}};
  if (chk.first_violation) r.details["first_violation"] = chk.first_violation->to_string();
  return r;
}

namespace detail {

inline std::vector<ClaimTask> rub_cert_tasks(const SuiteParams& p, const Config& cfg) {
  allow_params(p, {"k"}, "RUB-CERT");
  const int k = param_int(p, "k", 2);
  if (k < 2) throw UsageError("RUB-CERT needs k >= 2");
  const SuiteParams base{{"k", std::to_string(k)}};
  const Limits lim = cfg.limits;
  std::vector<ClaimTask> out;
  auto with = [&](const char* what) {
    SuiteParams q = base;
    q["quantity"] = what;
    return q;
  };
  out.push_back(guarded("RUB-CERT", "1-certificate complexity of the base function", with("C1(g)"),
                        [k, lim, q = with("C1(g)")] {
                          const auto g = materialize(rubinstein_base(k, k), lim);
                          return std::vector{equality_report("RUB-CERT", "1-certificate complexity of the base function",
                                                             q, k * k, certificate(g, ValueTag::OnOnes, lim))};
                        }));
  out.push_back(guarded("RUB-CERT", "0-certificate complexity of the base function", with("C0(g)"),
                        [k, lim, q = with("C0(g)")] {
                          const auto g = materialize(rubinstein_base(k, k), lim);
                          return std::vector{equality_report("RUB-CERT", "0-certificate complexity of the base function",
                                                             q, std::max(k, 2), certificate(g, ValueTag::OnZeros, lim))};
                        }));
  out.push_back(guarded("RUB-CERT", "certificate complexity of modified Rubinstein at the zero input",
                        with("C(f,0)"), [k, lim, q = with("C(f,0)")] {
                          const auto f = materialize(modified_rubinstein(k, k, k * k), lim);
                          require_within(f.arity(), lim.cert_cap, "certificate");
                          const auto res = certificate_at(f, 0, lim);
                          auto r = equality_report("RUB-CERT", "certificate complexity of modified Rubinstein at the zero input",
                                                   q, k * k * k, res.value);
                          r.details = {{"witness_mask", res.witness}};
                          return std::vector{r};
                        }));
  return out;
}

inline std::vector<ClaimTask> rub_bs_tasks(const SuiteParams& p, const Config& cfg) {
  allow_params(p, {"k"}, "RUB-BS");
  const int k = param_int(p, "k", 2);
  if (k < 2) throw UsageError("RUB-BS needs k >= 2");
  const Limits lim = cfg.limits;
  auto q = [k](const char* what) { return SuiteParams{{"k", std::to_string(k)}, {"quantity", what}}; };
  std::vector<ClaimTask> out;
  out.push_back(guarded("RUB-BS", "0-block sensitivity of the base function", q("bs0(g)"), [k, lim, q] {
    const auto g = materialize(rubinstein_base(k, k), lim);
    return std::vector{equality_report("RUB-BS", "0-block sensitivity of the base function", q("bs0(g)"), k,
                                       block_sensitivity(g, ValueTag::OnZeros, lim))};
  }));
  out.push_back(guarded("RUB-BS", "base function sensitivity at accepting and rejecting inputs",
                        q("s(g) on 1-inputs / 0-inputs"), [k, lim, q] {
                          const auto g = materialize(rubinstein_base(k, k), lim);
                          int min1 = g.arity();
                          int max0 = 0;
                          for (std::uint64_t e = 0; e < g.size(); ++e) {
                            const int s = sensitivity_at(g, e);
                            if (g.get(e)) {
                              min1 = std::min(min1, s);
                            } else {
                              max0 = std::max(max0, s);
                            }
                          }
                          const bool ok = min1 == k * k && max0 <= 1;
                          auto r = make_report("RUB-BS", "base function sensitivity at accepting and rejecting inputs",
                                               q("s(g) on 1-inputs / 0-inputs"),
                                               "all " + std::to_string(k * k) + " bits sensitive on 1-inputs; <= 1 on 0-inputs",
                                               "min on 1-inputs " + std::to_string(min1) + ", max on 0-inputs " +
                                                   std::to_string(max0),
                                               ok ? ClaimStatus::Pass : ClaimStatus::Fail);
                          return std::vector{r};
                        }));
  out.push_back(guarded("RUB-BS", "block sensitivity of modified Rubinstein at the zero input", q("bs(f,0)"),
                        [k, lim, q] {
                          const auto f = materialize(modified_rubinstein(k, k, k * k), lim);
                          const auto res = block_sensitivity_at(f, 0, lim);
                          auto r = equality_report("RUB-BS", "block sensitivity of modified Rubinstein at the zero input",
                                                   q("bs(f,0)"), k * k * k, res.value);
                          r.details = {{"blocks", res.witness.blocks}};
                          return std::vector{r};
                        }));
  return out;
}

inline std::vector<ClaimTask> rub_lemma_tasks(const SuiteParams& p, const Config& cfg) {
  allow_params(p, {"b", "n"}, "RUB-LEMMA");
  std::vector<std::pair<int, int>> pairs;
  if (p.count("b") || p.count("n")) {
    pairs.emplace_back(param_int(p, "b", 2), param_int(p, "n", 2));
  } else {
    pairs = {{2, 2}, {2, 3}, {3, 2}};
  }
  std::vector<ClaimTask> out;
  for (auto [b, n] : pairs) {
    const Limits lim = cfg.limits;
    out.push_back(guarded("RUB-LEMMA", "0-certificate and 0-block-sensitivity of restricted base function",
                          {{"b", std::to_string(b)}, {"n", std::to_string(n)}},
                          [b, n, lim] { return std::vector{verify_base_restriction_lemmas(b, n, lim)}; }));
  }
  return out;
}

inline std::vector<ClaimTask> incond_tasks(const SuiteParams& p, const Config& cfg, int jobs) {
  allow_params(p, {"b", "n", "r", "t", "measure", "seed", "trials"}, "INCOND");
  const Limits lim = cfg.limits;
  std::vector<ClaimTask> out;
  auto add = [&](RubinsteinParams rp, int t, Measure m, std::optional<SampleSpec> sample, int exhaustive_arity) {
    const SuiteParams q{{"b", std::to_string(rp.b)}, {"n", std::to_string(rp.n)},  {"r", std::to_string(rp.r)},
                        {"t", std::to_string(t)},    {"measure", m == Measure::Certificate ? "C" : "bs"}};
    out.push_back(guarded("INCOND", "restrictions of modified Rubinstein", q, [=] {
      return std::vector{verify_incondensability(rp, t, m, sample, lim, jobs, exhaustive_arity)};
    }));
  };
  std::vector<Measure> measures{Measure::BlockSensitivity, Measure::Certificate};
  if (auto it = p.find("measure"); it != p.end()) measures = {parse_measure(it->second)};
  const std::uint64_t seed = param_u64(p, "seed", cfg.default_seed);
  const std::uint64_t trials = param_u64(p, "trials", 100000);
  if (p.count("b") || p.count("n") || p.count("r") || p.count("t")) {
    const RubinsteinParams rp{param_int(p, "b", 2), param_int(p, "n", 2), param_int(p, "r", 2)};
    std::vector<int> budgets;
    if (p.count("t")) {
      budgets = {param_int(p, "t", 0)};
    } else {
      for (int t = 0; t <= rp.arity(); ++t) budgets.push_back(t);
    }
    const std::optional<SampleSpec> sample =
        rp.arity() <= 9 ? std::nullopt : std::optional<SampleSpec>(SampleSpec{seed, trials});
    for (int t : budgets) {
      for (Measure m : measures) add(rp, t, m, sample, 9);
    }
    return out;
  }
  for (int t = 0; t <= 8; ++t) {
    for (Measure m : measures) add({2, 2, 2}, t, m, std::nullopt, 9);
  }
  // The k = 1, 2 instances of b = n = k, r = k^2 with k^3 free variables.
  for (int k = 1; k <= 2; ++k) {
    for (Measure m : measures) add({k, k, k * k}, k * k * k, m, std::nullopt, 16);
  }
  for (Measure m : measures) add({2, 3, 2}, 6, m, SampleSpec{seed, trials}, 9);
  return out;
}

inline std::vector<ClaimTask> tribes_d0_tasks(const SuiteParams& p, const Config& cfg) {
  allow_params(p, {"n"}, "TRIBES-D0");
  std::vector<int> ns{2, 3};
  if (p.count("n")) ns = {param_int(p, "n", 2)};
  const Limits lim = cfg.limits;
  std::vector<ClaimTask> out;
  for (int n : ns) {
    if (n < 1) throw UsageError("TRIBES-D0 needs n >= 1");
    const int want = n * n - n + 1;
    auto q = [n](const char* what) { return SuiteParams{{"n", std::to_string(n)}, {"check", what}}; };
    out.push_back(guarded("TRIBES-D0", "0-depth of tribes", q("zero_depth"), [=] {
      const auto f = materialize(tribes(n), lim);
      return std::vector{equality_report("TRIBES-D0", "0-depth of tribes", q("zero_depth"), want, zero_depth(f, lim))};
    }));
    out.push_back(guarded("TRIBES-D0", "tribes adversary lower bound", q("adversary"), [=] {
      const auto v = adversary_game_value(n);
      const bool ok = v.value == want && v.min_queries == n * n && v.forcing;
      auto r = make_report("TRIBES-D0", "tribes adversary lower bound", q("adversary"),
                           "game value " + std::to_string(want) + ", every order forces " + std::to_string(n * n) +
                               " queries",
                           "game value " + std::to_string(v.value) + ", min queries " + std::to_string(v.min_queries),
                           ok ? ClaimStatus::Pass : ClaimStatus::Fail);
      r.details = {{"states", v.states}, {"forcing", v.forcing}};
      return std::vector{r};
    }));
    out.push_back(guarded("TRIBES-D0", "AND-query strategy for tribes", q("and_strategy"), [=] {
      const auto f = materialize(tribes(n), lim);
      int worst = 0;
      std::uint64_t wrong = 0;
      for (std::uint64_t e = 0; e < f.size(); ++e) {
        TribesAndStrategy qr(n);
        TruthfulResponder resp(bits_of(e, n * n));
        const auto t = play(qr, resp, n * n + 1);
        if (!t.output || *t.output != f.get(e)) ++wrong;
        worst = std::max(worst, static_cast<int>(t.queries.size()));
      }
      auto r = make_report("TRIBES-D0", "AND-query strategy for tribes", q("and_strategy"),
                           "correct on all inputs with <= " + std::to_string(want) + " AND-queries",
                           std::to_string(wrong) + " wrong outputs, worst " + std::to_string(worst) + " queries",
                           wrong == 0 && worst <= want ? ClaimStatus::Pass : ClaimStatus::Fail);
      r.details = {{"inputs", f.size()}};
      return std::vector{r};
    }));
  }
  return out;
}

/// zero_depth <= and-depth <= zero_depth * ceil(log2(arity + 1)) on every
/// function of the given arity, solving with one shared AND-tree memo.
struct SandwichSweep {
  std::uint64_t functions = 0;
  std::uint64_t violations = 0;
  std::optional<std::uint64_t> first_violation;
  int max_and_depth = 0;
};

inline SandwichSweep and_sandwich_sweep(int arity, const Limits& lim) {
  if (arity < 0 || arity > 4) throw CapacityError("AND sandwich sweep over all functions", 4);
  SandwichSweep s;
  AndTreeSolver solver(arity, lim);
  const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << arity);
  const int factor = ceil_log2(static_cast<std::uint64_t>(arity) + 1);
  for (std::uint64_t w = 0; w < count; ++w) {
    const auto f = DenseTruthTable::from_word(arity, w);
    const int z = zero_depth(f, lim);
    const int a = solver.depth(f);
    ++s.functions;
    s.max_and_depth = std::max(s.max_and_depth, a);
    if (a < z || a > z * factor) {
      ++s.violations;
      if (!s.first_violation) s.first_violation = w;
    }
  }
  return s;
}

inline std::vector<ClaimTask> sandwich_tasks(const SuiteParams& p, const Config& cfg) {
  allow_params(p, {"arity"}, "AND-SANDWICH");
  const int arity = param_int(p, "arity", 4);
  const Limits lim = cfg.limits;
  std::vector<ClaimTask> out;
  const SuiteParams q{{"arity", std::to_string(arity)}, {"functions", "all"}};
  out.push_back(guarded("AND-SANDWICH", "AND-depth between 0-depth and 0-depth times log", q, [=] {
    const auto s = and_sandwich_sweep(arity, lim);
    auto r = make_report("AND-SANDWICH", "AND-depth between 0-depth and 0-depth times log", q,
                         "dqc0 <= dqc_and <= dqc0*ceil(log2(" + std::to_string(arity + 1) + ")) for all functions",
                         std::to_string(s.functions) + " functions, " + std::to_string(s.violations) + " violations",
                         status_for(s.violations == 0, true));
    r.details = {{"max_and_depth", s.max_and_depth}};
    if (s.first_violation) r.details["first_violation_table"] = *s.first_violation;
    return std::vector{r};
  }));
  const SuiteParams qt{{"function", "tribes:2"}};
  out.push_back(guarded("AND-SANDWICH", "AND-depth between 0-depth and 0-depth times log", qt, [=] {
    const auto f = materialize(tribes(2), lim);
    const auto bounds = and_dt_depth_bounds(f, lim);
    const auto exact = and_dt_depth_exact(f, lim);
    const bool ok = bounds.lower <= exact.depth && exact.depth <= bounds.upper && exact.depth == 3 &&
                    exact.witness.computes(f);
    auto r = make_report("AND-SANDWICH", "AND-depth between 0-depth and 0-depth times log", qt,
                         "3 within [" + std::to_string(bounds.lower) + ", " + std::to_string(bounds.upper) + "]",
                         std::to_string(exact.depth), ok ? ClaimStatus::Pass : ClaimStatus::Fail);
    r.details = {{"lower", bounds.lower}, {"upper", bounds.upper}, {"witness_depth", exact.witness.depth()}};
    return std::vector{r};
  }));
  return out;
}

inline std::vector<ClaimTask> cs_adv_tasks(const SuiteParams& p, const Config& cfg) {
  allow_params(p, {"n", "c"}, "CS-ADV");
  const int n = param_int(p, "n", 2);
  const int c = param_int(p, "c", 2);
  const Limits lim = cfg.limits;
  const std::string ref = "cheat-sheet adversary forces n^2 copy queries or a flippable untouched cell";
  std::vector<ClaimTask> out;
  auto q = [n, c](const char* who) {
    return SuiteParams{{"n", std::to_string(n)}, {"c", std::to_string(c)}, {"querier", who}};
  };
  out.push_back(guarded("CS-ADV", ref, q("exhaustive"), [=] {
    nlohmann::json lengths = nlohmann::json::array();
    std::uint64_t sequences = 0;
    std::uint64_t bad = 0;
    for (int len = 0; len < n * n; ++len) {
      const auto rep = exhaustive_short_sequences(n, c, len, lim);
      sequences += rep.sequences;
      bad += rep.determined + rep.dichotomy_failures;
      lengths.push_back({{"length", len},
                         {"sequences", rep.sequences},
                         {"determined", rep.determined},
                         {"dichotomy_failures", rep.dichotomy_failures}});
    }
    auto r = make_report("CS-ADV", ref, q("exhaustive"),
                         "no sequence of < " + std::to_string(n * n) + " queries fixes the output",
                         std::to_string(sequences) + " sequences, " + std::to_string(bad) + " counterexamples",
                         status_for(bad == 0, true));
    r.details = {{"lengths", lengths}};
    return std::vector{r};
  }));
  for (const char* who : {"copies-first", "cell-scan"}) {
    const std::string name = who;
    out.push_back(guarded("CS-ADV", ref, q(who), [=] {
      CheatSheetAdversary adv(n, c, lim);
      const auto& spec = adv.spec();
      GameTranscript t;
      if (name == "copies-first") {
        CopiesFirstQuerier qr(spec);
        t = play(qr, adv, adv.arity());
      } else {
        CellScanQuerier qr(spec);
        t = play(qr, adv, adv.arity());
      }
      const auto d = analyze_cheatsheet_transcript(spec, t, lim);
      auto r = make_report("CS-ADV", ref, q(name.c_str()),
                           ">= " + std::to_string(n * n) + " copy queries, or untouched cell with outputs 0 and 1",
                           std::to_string(d.copy_queries) + " copy queries of " + std::to_string(d.queries) +
                               (d.flip_case() ? ", flippable cell" : ""),
                           d.holds() ? ClaimStatus::Pass : ClaimStatus::Fail);
      r.details = {{"queries", d.queries},
                   {"copy_queries", d.copy_queries},
                   {"cell_touches", d.cell_touches},
                   {"zero_count", t.zero_count},
                   {"one_count", t.one_count},
                   {"output", t.output ? nlohmann::json(*t.output ? 1 : 0) : nlohmann::json(nullptr)}};
      return std::vector{r};
    }));
  }
  return out;
}

inline std::vector<ClaimTask> dual_tasks(const SuiteParams& p, const Config& cfg) {
  allow_params(p, {"n"}, "DUAL");
  std::vector<int> ns{2, 3};
  if (p.count("n")) ns = {param_int(p, "n", 2)};
  const Limits lim = cfg.limits;
  std::vector<ClaimTask> out;
  for (int n : ns) {
    auto q = [n](const char* what) { return SuiteParams{{"n", std::to_string(n)}, {"check", what}}; };
    out.push_back(guarded("DUAL", "dual tribes is the input-and-output complement of tribes", q("duality"), [=] {
      const auto d = materialize(dual_tribes(n), lim);
      const auto t = materialize(tribes(n), lim);
      const bool ok = d == ~t.complement_inputs();
      return std::vector{make_report("DUAL", "dual tribes is the input-and-output complement of tribes", q("duality"),
                                     "pointwise equal", ok ? "equal" : "differs",
                                     ok ? ClaimStatus::Pass : ClaimStatus::Fail)};
    }));
    out.push_back(guarded("DUAL", "1-depth of dual tribes", q("one_depth"), [=] {
      const auto d = materialize(dual_tribes(n), lim);
      return std::vector{equality_report("DUAL", "1-depth of dual tribes", q("one_depth"), n * n - n + 1,
                                         one_depth(d, lim))};
    }));
    out.push_back(guarded("DUAL", "OR-depth of dual tribes", q("or_depth"), [=] {
      const auto d = materialize(dual_tribes(n), lim);
      const auto t = materialize(tribes(n), lim);
      const int od = or_dt_depth_exact(d, lim);
      const int ad = and_dt_depth_exact(t, lim).depth;
      const int one = one_depth(d, lim);
      const bool ok = od == ad && one <= od;
      auto r = make_report("DUAL", "OR-depth of dual tribes", q("or_depth"),
                           "= AND-depth of tribes (" + std::to_string(ad) + ") and >= 1-depth (" +
                               std::to_string(one) + ")",
                           std::to_string(od), ok ? ClaimStatus::Pass : ClaimStatus::Fail);
      return std::vector{r};
    }));
  }
  return out;
}

/// Upward closure of a few random points; arity <= 8 keeps this a table scan.
inline DenseTruthTable random_monotone(std::mt19937_64& rng, int arity) {
  DenseTruthTable f(arity);
  const std::uint64_t size = std::uint64_t{1} << arity;
  const int seeds = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(arity + 1));
  std::vector<std::uint64_t> mins;
  for (int i = 0; i < seeds; ++i) mins.push_back(rng() % size);
  for (std::uint64_t e = 0; e < size; ++e) {
    for (auto m : mins) {
      if ((e & m) == m) {
        f.set(e, true);
        break;
      }
    }
  }
  return f;
}

struct ChainSweep {
  std::uint64_t functions = 0;
  std::uint64_t violations = 0;
  std::optional<std::uint64_t> first_violation;
};

/// s <= bs <= C <= D on every function of the given arity.
inline ChainSweep chain_sweep(int arity, const Limits& lim) {
  if (arity < 0 || arity > 4) throw CapacityError("measure chain sweep over all functions", 4);
  ChainSweep s;
  const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << arity);
  for (std::uint64_t w = 0; w < count; ++w) {
    const auto f = DenseTruthTable::from_word(arity, w);
    const int sv = sensitivity(f, ValueTag::All, lim);
    const int bv = block_sensitivity(f, ValueTag::All, lim);
    const int cv = certificate(f, ValueTag::All, lim);
    const int dv = dt_depth(f, lim);
    ++s.functions;
    if (!(sv <= bv && bv <= cv && cv <= dv)) {
      ++s.violations;
      if (!s.first_violation) s.first_violation = w;
    }
  }
  return s;
}

inline std::vector<ClaimTask> monotone_tasks(const SuiteParams& p, const Config& cfg) {
  allow_params(p, {"seed", "trials", "max_arity"}, "MONOTONE");
  const std::uint64_t seed = param_u64(p, "seed", cfg.default_seed);
  const std::uint64_t trials = param_u64(p, "trials", 200);
  const int max_arity = param_int(p, "max_arity", 8);
  if (max_arity < 1 || trials < 1) throw UsageError("MONOTONE needs max_arity >= 1 and trials >= 1");
  const Limits lim = cfg.limits;
  std::vector<ClaimTask> out;
  const SuiteParams q{{"max_arity", std::to_string(max_arity)}, {"check", "s=bs=C"}};
  out.push_back(guarded("MONOTONE", "monotone functions have s = bs = C", q, [=] {
    std::mt19937_64 rng(seed);
    std::uint64_t bad = 0;
    nlohmann::json first;
    for (std::uint64_t i = 0; i < trials; ++i) {
      const int arity = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_arity));
      const auto f = random_monotone(rng, arity);
      const int sv = sensitivity(f, ValueTag::All, lim);
      const int bv = block_sensitivity(f, ValueTag::All, lim);
      const int cv = certificate(f, ValueTag::All, lim);
      if (sv != bv || bv != cv) {
        if (bad == 0) first = {{"table", f.to_hex()}, {"arity", arity}, {"s", sv}, {"bs", bv}, {"C", cv}};
        ++bad;
      }
    }
    auto r = make_report("MONOTONE", "monotone functions have s = bs = C", q, "s = bs = C on every sample",
                         std::to_string(trials) + " functions, " + std::to_string(bad) + " violations",
                         status_for(bad == 0, false));
    r.exhaustive = false;
    r.seed = seed;
    r.trials = trials;
    if (bad) r.details = {{"first_violation", first}};
    return std::vector{r};
  }));
  const SuiteParams qc{{"arity", "4"}, {"check", "s<=bs<=C<=D"}};
  out.push_back(guarded("MONOTONE", "measure chain s <= bs <= C <= D", qc, [=] {
    const auto s = chain_sweep(4, lim);
    auto r = make_report("MONOTONE", "measure chain s <= bs <= C <= D", qc, "holds for all functions",
                         std::to_string(s.functions) + " functions, " + std::to_string(s.violations) + " violations",
                         status_for(s.violations == 0, true));
    if (s.first_violation) r.details = {{"first_violation_table", *s.first_violation}};
    return std::vector{r};
  }));
  return out;
}

inline std::vector<ClaimTask> opt_exp_tasks(const SuiteParams& p, const Config&) {
  allow_params(p, {"step", "max"}, "OPT-EXP");
  Rational step(1, 2);
  Rational top(3);
  try {
    if (auto it = p.find("step"); it != p.end()) step = Rational::parse(it->second);
    if (auto it = p.find("max"); it != p.end()) top = Rational::parse(it->second);
  } catch (const std::exception&) {
    throw UsageError("OPT-EXP step and max must be rationals like 1/2");
  }
  const SuiteParams q{{"step", step.to_string()}, {"max", top.to_string()}};
  std::vector<ClaimTask> out;
  out.push_back(guarded("OPT-EXP", "optimality exponent of the parameterized family", q, [=] {
    const auto g = optimality_grid(step, top);
    std::string where;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& pt : g.argmax) {
      if (!where.empty()) where += " ";
      where += "(" + pt.alpha.to_string() + "," + pt.beta.to_string() + ")";
      pts.push_back({pt.alpha.to_string(), pt.beta.to_string()});
    }
    const bool has_peak = step.den() > 0 && Rational(2) <= top &&
                          (Rational(1) / step).den() == 1;  // grid contains (1, 2)
    const OptimalityPoint peak{Rational(1), Rational(2)};
    const bool at_peak = std::find(g.argmax.begin(), g.argmax.end(), peak) != g.argmax.end();
    const bool ok = has_peak ? (g.value == Rational(3, 2) && at_peak) : g.value <= Rational(3, 2);
    auto r = make_report("OPT-EXP", "optimality exponent of the parameterized family", q,
                         has_peak ? "max 3/2 at (1,2)" : "max <= 3/2", g.value.to_string() + " at " + where,
                         ok ? ClaimStatus::Pass : ClaimStatus::Fail);
    r.details = {{"points", g.points}, {"argmax", pts}};
    return std::vector{r};
  }));
  return out;
}

inline std::vector<ClaimTask> suite_tasks(const std::string& id, const SuiteParams& p, const Config& cfg, int jobs) {
  if (id == "RUB-CERT") return rub_cert_tasks(p, cfg);
  if (id == "RUB-BS") return rub_bs_tasks(p, cfg);
  if (id == "RUB-LEMMA") return rub_lemma_tasks(p, cfg);
  if (id == "INCOND") return incond_tasks(p, cfg, jobs);
  if (id == "TRIBES-D0") return tribes_d0_tasks(p, cfg);
  if (id == "AND-SANDWICH") return sandwich_tasks(p, cfg);
  if (id == "CS-ADV") return cs_adv_tasks(p, cfg);
  if (id == "DUAL") return dual_tasks(p, cfg);
  if (id == "MONOTONE") return monotone_tasks(p, cfg);
  if (id == "OPT-EXP") return opt_exp_tasks(p, cfg);
  throw UsageError("unknown claim suite '" + id + "'");
}

}  // namespace detail

/// Runs one suite ("all" runs the whole catalog with default parameters).
/// Tasks run on up to `jobs` threads; the output is sorted and carries the
/// effective configuration.
inline std::vector<ClaimReport> run_claim_suite(const std::string& suite_id, const SuiteParams& params = {},
                                                const Config& cfg = {}, int jobs = 1) {
  std::vector<detail::ClaimTask> tasks;
  if (suite_id == "all") {
    if (!params.empty()) throw UsageError("suite 'all' takes no parameters");
    for (const auto& id : claim_catalog()) {
      auto t = detail::suite_tasks(id, {}, cfg, 1);
      tasks.insert(tasks.end(), t.begin(), t.end());
    }
  } else {
    tasks = detail::suite_tasks(suite_id, params, cfg, std::max(1, jobs));
  }
  std::vector<std::vector<ClaimReport>> slots(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      const auto start = std::chrono::steady_clock::now();
      try {
        slots[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      for (auto& r : slots[i]) r.runtime_ms = ms.count();
    }
  };
  const int threads = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<ClaimReport> out;
  const auto cfg_json = to_json(cfg);
  for (auto& s : slots) {
    for (auto& r : s) {
      r.config = cfg_json;
      out.push_back(std::move(r));
    }
  }
  sort_reports(out);
  return out;
}

/// True iff no report failed.
inline bool all_passed(const std::vector<ClaimReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const ClaimReport& r) { return r.status == ClaimStatus::Fail; });
}

inline bool any_skipped(const std::vector<ClaimReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const ClaimReport& r) { return r.status == ClaimStatus::Skipped; });
}

}  // namespace bflab
