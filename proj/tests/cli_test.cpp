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

#include "bflab/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace bflab {
namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "bflab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Cli, MeasureJson) {
  const auto r = cli({"measure", "--fn", "tribes:2", "--kind", "D"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j.at("kind"), "D");
  EXPECT_EQ(j.at("value"), 4);
  EXPECT_EQ(j.at("function").at("family"), "tribes");
  const auto c0 = cli({"measure", "--fn", "rub:2,2", "--kind", "C", "--tag", "zeros"}).json();
  EXPECT_EQ(c0.at("kind"), "C0");
  EXPECT_EQ(c0.at("value"), 2);
}

TEST(Cli, MeasureAtPointWithWitness) {
  const auto j = cli({"measure", "--fn", "or:3", "--kind", "bs", "--at", "000", "--witness"}).json();
  EXPECT_EQ(j.at("at"), "000");
  EXPECT_EQ(j.at("value"), 3);
  EXPECT_TRUE(j.contains("witness"));
  EXPECT_EQ(cli({"measure", "--fn", "or:3", "--kind", "bs", "--at", "00"}).code, kExitUsage);
  EXPECT_EQ(cli({"measure", "--fn", "or:3", "--kind", "D", "--at", "000"}).code, kExitUsage);
}

TEST(Cli, AndTreeWitnessIsNested) {
  const auto j = cli({"measure", "--fn", "and:2", "--kind", "dqc_and", "--witness"}).json();
  EXPECT_EQ(j.at("value"), 1);
  const auto& w = j.at("witness");
  EXPECT_TRUE(w.contains("query"));
  EXPECT_EQ(w.at("if1").at("output"), 1);
  EXPECT_EQ(w.at("if0").at("output"), 0);
}

TEST(Cli, BuildAndRestrictRoundTrip) {
  const auto table = temp("bflab_cli_table.txt");
  ASSERT_EQ(cli({"build", "--fn", "tribes:2", "--out", table.string()}).code, kExitPass);
  EXPECT_EQ(slurp(table).substr(0, 9), "arity: 4\n");
  const auto again = cli({"measure", "--fn", table.string(), "--kind", "deg"});
  EXPECT_EQ(again.json().at("value"), 4);
  EXPECT_EQ(again.json().at("function").at("family"), "table");
  const auto r = cli({"restrict", "--fn", table.string(), "--rho", "1*0*"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(r.out.substr(0, 9), "arity: 2\n");
  EXPECT_EQ(cli({"restrict", "--fn", "tribes:2", "--rho", "1*0"}).code, kExitUsage);
  std::filesystem::remove(table);
}

TEST(Cli, Condense) {
  const auto j = cli({"condense", "--fn", "rub:2,2", "--measure", "bs", "--free", "0,2,4"}).json();
  ASSERT_EQ(j.at("rows").size(), 3U);
  EXPECT_EQ(j.at("rows").at(1).at("value"), 2);
  EXPECT_EQ(j.at("rows").at(1).at("mode"), "exhaustive");
  const auto s = cli({"condense", "--fn", "modrub:2,2,2", "--measure", "bs", "--free", "4", "--sample", "5:200"}).json();
  EXPECT_EQ(s.at("rows").at(0).at("examined"), 200);
  EXPECT_EQ(s.at("rows").at(0).at("mode"), "sampled lower bound (seed 5, trials 200)");
  EXPECT_EQ(cli({"condense", "--fn", "rub:2,2", "--measure", "bs", "--free", "2", "--sample", "x"}).code, kExitUsage);
  EXPECT_EQ(cli({"condense", "--fn", "rub:2,2", "--measure", "bs", "--free", "9"}).code, kExitUsage);
}

TEST(Cli, VerifyIsDeterministicAcrossJobs) {
  const auto a = cli({"verify", "--claim", "RUB-LEMMA"});
  const auto b = cli({"--jobs", "4", "verify", "--claim", "RUB-LEMMA"});
  ASSERT_EQ(a.code, kExitPass);
  auto strip = [](nlohmann::json j) {
    for (auto& r : j) r.erase("runtime_ms");
    return j.dump();
  };
  EXPECT_EQ(strip(a.json()), strip(b.json()));
}

TEST(Cli, StrictTurnsSkipsIntoExitThree) {
  EXPECT_EQ(cli({"verify", "--claim", "RUB-BS", "--params", "k=3"}).code, kExitPass);
  EXPECT_EQ(cli({"--strict", "verify", "--claim", "RUB-BS", "--params", "k=3"}).code, kExitCapacity);
}

TEST(Cli, ExportConvertsFormats) {
  const auto reports = temp("bflab_cli_reports.json");
  ASSERT_EQ(cli({"verify", "--claim", "OPT-EXP", "--out", reports.string()}).code, kExitPass);
  const auto csv = cli({"--format", "csv", "export", "--in", reports.string()});
  ASSERT_EQ(csv.code, kExitPass);
  EXPECT_EQ(csv.out.rfind("claim_id,claim_ref,params", 0), 0U);
  EXPECT_NE(csv.out.find("Pass"), std::string::npos);
  const auto md = cli({"--format", "markdown", "export", "--in", reports.string()});
  EXPECT_EQ(md.out.rfind("| claim_id |", 0), 0U);
  EXPECT_EQ(cli({"--format", "xml", "export", "--in", reports.string()}).code, kExitUsage);
  EXPECT_EQ(cli({"export", "--in", "/nonexistent.json"}).code, kExitUsage);
  std::filesystem::remove(reports);
}

TEST(Cli, GameTranscripts) {
  const auto t = cli({"game", "--kind", "tribes", "--n", "2", "--querier", "greedy"}).json();
  EXPECT_EQ(t.at("queries").size(), 4U);
  EXPECT_EQ(t.at("zero_count"), 3);
  const auto p = cli({"game", "--kind", "tribes", "--n", "2", "--querier", "and-strategy", "--input", "1010"}).json();
  EXPECT_EQ(p.at("output"), 1);
  const auto cs = cli({"game", "--kind", "cheatsheet", "--n", "2", "--c", "2", "--querier", "greedy"}).json();
  EXPECT_EQ(cs.at("queries").size(), 10U);
  EXPECT_TRUE(cs.at("analysis").at("copy_case"));
  EXPECT_EQ(cli({"game", "--kind", "cheatsheet", "--n", "2", "--c", "2", "--querier", "and-strategy"}).code, kExitUsage);
  EXPECT_EQ(cli({"game", "--kind", "chess", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(cli({"game", "--kind", "tribes", "--n", "2"}).json().at("queries").size(), 3U);
  EXPECT_EQ(cli({"game", "--kind", "cheatsheet", "--n", "2", "--c", "2"}).json().at("queries").size(), 10U);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"--help"}).code, kExitPass);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"measure", "--fn", "zork:1", "--kind", "D"}).code, kExitUsage);
  EXPECT_EQ(cli({"measure", "--fn", "tribes:4", "--kind", "D"}).code, kExitCapacity);
  EXPECT_EQ(cli({"verify", "--claim", "NOPE"}).code, kExitUsage);
  EXPECT_EQ(cli({"--jobs", "0", "verify", "--claim", "OPT-EXP"}).code, kExitUsage);
  const auto conf = temp("bflab_cli_bad.conf");
  {
    std::ofstream(conf) << "dt_cap = 0\n";
  }
  const auto bad = cli({"--config", conf.string(), "verify", "--claim", "OPT-EXP"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("config line 1"), std::string::npos);
  std::filesystem::remove(conf);
}

TEST(Cli, ConfigIsEchoedIntoReports) {
  const auto conf = temp("bflab_cli_good.conf");
  {
    std::ofstream(conf) << "dt_cap = 10\n";
  }
  const auto j = cli({"--config", conf.string(), "verify", "--claim", "OPT-EXP"}).json();
  EXPECT_EQ(j.at(0).at("config").at("dt_cap"), 10);
  std::filesystem::remove(conf);
}

}  // namespace
}  // namespace bflab
