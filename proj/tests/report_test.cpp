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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bflab/claims.hpp"
#include "bflab/family_literal.hpp"

namespace bflab {
namespace {

ClaimReport sample_report(std::string id, ClaimStatus status) {
  ClaimReport r;
  r.claim_id = std::move(id);
  r.claim_ref = "example, with comma";
  r.params = {{"n", "2"}, {"b", "3"}};
  r.expected = "3";
  r.observed = "3";
  r.status = status;
  r.details = {{"note", "x|y"}};
  return r;
}

TEST(Report, StatusFor) {
  EXPECT_EQ(status_for(true, true), ClaimStatus::Pass);
  EXPECT_EQ(status_for(true, false), ClaimStatus::NoCounterexample);
  EXPECT_EQ(status_for(false, true), ClaimStatus::Fail);
  EXPECT_EQ(status_for(false, false), ClaimStatus::Fail);
  for (auto s : {ClaimStatus::Pass, ClaimStatus::Fail, ClaimStatus::NoCounterexample, ClaimStatus::Skipped}) {
    EXPECT_EQ(parse_status(to_string(s)), s);
  }
  EXPECT_THROW(parse_status("Maybe"), InputShapeError);
}

TEST(Report, ExportEmpty) {
  EXPECT_EQ(export_reports({}, ExportFormat::Json), "[]\n");
  EXPECT_EQ(export_reports({}, ExportFormat::Csv), "claim_id,claim_ref,params,expected,observed,status,mode,runtime_ms\n");
  const auto md = export_reports({}, ExportFormat::Markdown);
  EXPECT_EQ(std::count(md.begin(), md.end(), '\n'), 2);
}

TEST(Report, ExportSingleFlattensAndQuotes) {
  const auto r = sample_report("RUB-CERT", ClaimStatus::Pass);
  const auto csv = export_reports({r}, ExportFormat::Csv);
  EXPECT_NE(csv.find("RUB-CERT,\"example, with comma\",b=3;n=2,3,3,Pass,Exhaustive,0\n"), std::string::npos) << csv;
  const auto md = export_reports({r}, ExportFormat::Markdown);
  EXPECT_NE(md.find("| RUB-CERT | example, with comma | b=3;n=2 | 3 | 3 | Pass | Exhaustive | 0 |"), std::string::npos)
      << md;
}

TEST(Report, ExportMixedAndRoundTrip) {
  auto sampled = sample_report("INCOND", ClaimStatus::NoCounterexample);
  sampled.exhaustive = false;
  sampled.seed = 7;
  sampled.trials = 1000;
  sampled.runtime_ms = 12;
  const std::vector<ClaimReport> rs{sample_report("A", ClaimStatus::Fail), sampled,
                                    sample_report("B", ClaimStatus::Skipped)};
  const auto csv = export_reports(rs, ExportFormat::Csv);
  EXPECT_NE(csv.find("Sampled(7,1000)"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  const auto back = parse_reports_json(export_reports(rs, ExportFormat::Json));
  ASSERT_EQ(back.size(), 3U);
  EXPECT_EQ(back[1].seed, 7U);
  EXPECT_FALSE(back[1].exhaustive);
  EXPECT_EQ(back[1].details, sampled.details);
  EXPECT_EQ(export_reports(back, ExportFormat::Json), export_reports(rs, ExportFormat::Json));
}

TEST(Report, MarkdownEscapesPipes) {
  auto r = sample_report("X", ClaimStatus::Pass);
  r.observed = "a|b";
  EXPECT_NE(export_reports({r}, ExportFormat::Markdown).find("a\\|b"), std::string::npos);
}

TEST(Report, Sort) {
  std::vector<ClaimReport> rs{sample_report("B", ClaimStatus::Pass), sample_report("A", ClaimStatus::Pass)};
  rs[1].params = {{"n", "3"}};
  rs.push_back(sample_report("A", ClaimStatus::Pass));
  rs.back().params = {{"n", "2"}};
  sort_reports(rs);
  EXPECT_EQ(rs[0].claim_id, "A");
  EXPECT_EQ(rs[0].params.at("n"), "2");
  EXPECT_EQ(rs[2].claim_id, "B");
  EXPECT_EQ(parse_format("md"), ExportFormat::Markdown);
  EXPECT_THROW(parse_format("xml"), UsageError);
}

TEST(Config, DefaultsAndOverrides) {
  std::istringstream empty("");
  EXPECT_EQ(parse_config(empty), Config{});
  std::istringstream in("# caps\ndt_cap = 10\n\n  bs_cap=12  # inline\ndefault_seed = 42\n");
  const auto c = parse_config(in);
  EXPECT_EQ(c.limits.dt_cap, 10);
  EXPECT_EQ(c.limits.bs_cap, 12);
  EXPECT_EQ(c.limits.cert_cap, Limits{}.cert_cap);
  EXPECT_EQ(c.default_seed, 42U);
  EXPECT_EQ(to_json(c).at("dt_cap"), 10);
}

TEST(Config, ErrorsNameTheLine) {
  const auto message = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_config(in);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("dt_cap = 10\ndense_cap = 0\n").find("config line 2"), std::string::npos);
  EXPECT_NE(message("dt_cap = 65").find("<= 64"), std::string::npos);
  EXPECT_NE(message("colour = 3").find("unknown key"), std::string::npos);
  EXPECT_NE(message("dt_cap").find("config line 1"), std::string::npos);
  EXPECT_NE(message("dt_cap = ten").find("config line 1"), std::string::npos);
}

TEST(Config, LoadFromFileAndEnvironment) {
  const auto path = std::filesystem::temp_directory_path() / "bflab_report_test.conf";
  {
    std::ofstream out(path);
    out << "andtree_cap = 4\n";
  }
  EXPECT_EQ(load_config(path.string()).limits.andtree_cap, 4);
  ::setenv(kConfigEnv, path.c_str(), 1);
  EXPECT_EQ(load_config().limits.andtree_cap, 4);
  ::unsetenv(kConfigEnv);
  EXPECT_EQ(load_config(), Config{});
  EXPECT_THROW(load_config("/nonexistent/bflab.conf"), ConfigError);
  std::filesystem::remove(path);
}

TEST(FamilyLiteral, Parses) {
  const auto r = parse_family("rub:2,3");
  EXPECT_EQ(r.family, "rub");
  EXPECT_EQ(r.params, (std::vector<int>{2, 3}));
  EXPECT_EQ(r.function.arity(), 6);
  EXPECT_EQ(r.descriptor(), (nlohmann::json{{"family", "rub"}, {"params", {2, 3}}}));
  EXPECT_EQ(parse_family("modrub:2,2,3").function.arity(), 12);
  EXPECT_EQ(parse_family("tribes:3").function.arity(), 9);
  EXPECT_EQ(parse_family("dualtribes:2").function.arity(), 4);
  const auto cs = parse_family("cs:tribes:2,2");
  EXPECT_EQ(cs.family, "cs:tribes");
  EXPECT_EQ(cs.function.arity(), 56);
  EXPECT_EQ(materialize(parse_family("const:3,1").function).count_ones(), 8U);
  EXPECT_EQ(materialize(parse_family("maj:3").function).count_ones(), 4U);
}

TEST(FamilyLiteral, Errors) {
  for (const char* bad : {"rub", "rub:2", "rub:2,x", "rub:0,2", "cs:maj:2,2", "const:3,2", "zork:1", "and:99"}) {
    EXPECT_ANY_THROW(parse_family(bad)) << bad;
  }
  EXPECT_THROW(parse_family("zork:1"), UsageError);
  EXPECT_THROW(parse_family("and:99"), CapacityError);
}

TEST(FamilyLiteral, LoadsTableFiles) {
  const auto path = std::filesystem::temp_directory_path() / "bflab_table.txt";
  {
    std::ofstream out(path);
    write_table_file(out, materialize(tribes(2)));
  }
  const auto f = load_function(path.string());
  EXPECT_EQ(f.family, "table");
  EXPECT_EQ(materialize(f.function), materialize(tribes(2)));
  std::filesystem::remove(path);
  EXPECT_THROW(load_function(path.string()), UsageError);
}

TEST(Suites, ParamsAndCatalog) {
  EXPECT_EQ(parse_suite_params("k=2,n=3"), (SuiteParams{{"k", "2"}, {"n", "3"}}));
  EXPECT_EQ(parse_suite_params("k=2;n=3"), (SuiteParams{{"k", "2"}, {"n", "3"}}));
  EXPECT_TRUE(parse_suite_params("").empty());
  EXPECT_THROW(parse_suite_params("k"), UsageError);
  EXPECT_THROW(parse_suite_params("=2"), UsageError);
  EXPECT_TRUE(std::is_sorted(claim_catalog().begin(), claim_catalog().end()));
  EXPECT_EQ(claim_catalog().size(), 10U);
  EXPECT_THROW(run_claim_suite("NOPE"), UsageError);
  EXPECT_THROW(run_claim_suite("all", {{"k", "2"}}), UsageError);
}

TEST(Suites, SmallRunsPass) {
  for (const auto& [id, params] : std::vector<std::pair<std::string, SuiteParams>>{
           {"RUB-CERT", {{"k", "2"}}}, {"RUB-BS", {{"k", "2"}}}, {"OPT-EXP", {}}, {"RUB-LEMMA", {}}}) {
    const auto rs = run_claim_suite(id, params);
    ASSERT_FALSE(rs.empty()) << id;
    for (const auto& r : rs) {
      EXPECT_EQ(r.claim_id, id);
      EXPECT_EQ(r.status, ClaimStatus::Pass) << id << " " << r.observed;
      EXPECT_EQ(r.config, to_json(Config{}));
    }
    EXPECT_TRUE(all_passed(rs));
    EXPECT_FALSE(any_skipped(rs));
  }
}

TEST(Suites, CapacityBecomesSkipped) {
  Config cfg;
  cfg.limits.dt_cap = 3;
  const auto rs = run_claim_suite("TRIBES-D0", {}, cfg);
  EXPECT_TRUE(any_skipped(rs));
  for (const auto& r : rs) {
    if (r.status == ClaimStatus::Skipped) {
      EXPECT_TRUE(r.details.contains("reason"));
    }
  }
  // k = 3 puts the modified function at 81 variables, past the dense cap.
  const auto bs = run_claim_suite("RUB-BS", {{"k", "3"}});
  EXPECT_EQ(std::count_if(bs.begin(), bs.end(), [](const ClaimReport& r) { return r.status == ClaimStatus::Skipped; }), 1);
  EXPECT_TRUE(all_passed(bs));
}

TEST(Suites, RejectsUnknownParams) {
  EXPECT_THROW(run_claim_suite("RUB-CERT", {{"q", "1"}}), UsageError);
  EXPECT_THROW(run_claim_suite("RUB-CERT", {{"k", "x"}}), UsageError);
}

}  // namespace
}  // namespace bflab
