// Copyright 2026 The altqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "altqa/cli/app.hpp"
#include "altqa/common/jsonl.hpp"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

namespace altqa::cli {
namespace {

using altqa::testing::fixture_path;
using altqa::testing::read_file;
using altqa::testing::TempDir;
using altqa::testing::write_file;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "altqa");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path) {
  std::vector<nlohmann::json> rows;
  jsonl::for_each(path, [&](std::size_t, const nlohmann::json& doc) { rows.push_back(doc); });
  return rows;
}

// Compares two JSON values, numbers within tolerance.
void expect_json_near(const nlohmann::json& got, const nlohmann::json& want, const std::string& where) {
  if (want.is_number()) {
    ASSERT_TRUE(got.is_number()) << where << ": " << got;
    EXPECT_NEAR(got.get<double>(), want.get<double>(), 1e-12) << where;
  } else if (want.is_object()) {
    ASSERT_TRUE(got.is_object()) << where << ": " << got;
    EXPECT_EQ(got.size(), want.size()) << where;
    for (const auto& [k, v] : want.items()) {
      ASSERT_TRUE(got.contains(k)) << where << "." << k;
      expect_json_near(got[k], v, where + "." + k);
    }
  } else if (want.is_array()) {
    ASSERT_EQ(got.size(), want.size()) << where;
    for (std::size_t i = 0; i < want.size(); ++i) expect_json_near(got[i], want[i], where + "[" + std::to_string(i) + "]");
  } else {
    EXPECT_EQ(got, want) << where;
  }
}

TEST(CliTest, HelpAndMissingSubcommand) {
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
}

TEST(CliScoreTest, MatchesGoldenFile) {
  TempDir dir("score");
  const auto r = run_cli({"score", "--predictions", fixture_path("cli/score_input.jsonl").string(), "-o",
                          (dir / "scores.jsonl").string(), "--summary", (dir / "summary.json").string(),
                          "--at-k", "--k", "2", "--k-prime", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto got = read_jsonl(dir / "scores.jsonl");
  const auto want = read_jsonl(fixture_path("cli/score_expected.jsonl"));
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) expect_json_near(got[i], want[i], "row " + std::to_string(i));

  const auto summary = nlohmann::json::parse(read_file(dir / "summary.json"));
  EXPECT_EQ(summary["rows"], 3);
  EXPECT_NEAR(summary["macro"]["reward"].get<double>(), (0.92 + 0.1 + 0.0) / 3, 1e-12);
  EXPECT_EQ(summary["at_k"]["rows"], 1);
}

TEST(CliScoreTest, EmptyInputAndBadLines) {
  TempDir dir("score");
  write_file(dir / "empty.jsonl", "");
  auto r = run_cli({"score", "--predictions", (dir / "empty.jsonl").string(), "-o", (dir / "o.jsonl").string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(read_jsonl(dir / "o.jsonl").empty());

  write_file(dir / "bad.jsonl", "{\"question_id\": \"q\"}\nnot json\n");
  r = run_cli({"score", "--predictions", (dir / "bad.jsonl").string(), "-o", (dir / "o.jsonl").string(),
               "--summary", (dir / "s.json").string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("bad.jsonl:2"), std::string::npos) << r.err;
  EXPECT_EQ(nlohmann::json::parse(read_file(dir / "s.json"))["errors"].size(), 2u);
}

TEST(CliScoreTest, ConfigErrorsExitTwo) {
  TempDir dir("score");
  const std::string in = fixture_path("cli/score_input.jsonl").string();
  const std::string out = (dir / "o.jsonl").string();
  EXPECT_EQ(run_cli({"score", "--predictions", in, "-o", out, "--k", "7", "--k-prime", "6"}).code, 2);
  EXPECT_EQ(run_cli({"score", "--predictions", in, "-o", out, "--alpha", "1.5"}).code, 2);
  EXPECT_EQ(run_cli({"score", "-o", out}).code, 2);
}

TEST(CliScoreTest, ConfigFileSuppliesFlags) {
  TempDir dir("score");
  write_file(dir / "altqa.toml", "[score]\npredictions = \"" + fixture_path("cli/score_input.jsonl").string() +
                                     "\"\noutput = \"" + (dir / "o.jsonl").string() + "\"\nalpha = 0.2\n");
  const auto r = run_cli({"--config", (dir / "altqa.toml").string(), "score"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_jsonl(dir / "o.jsonl");
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[0]["reward"].get<double>(), 1 - 0.2 * 0.2, 1e-12);
}

TEST(CliEstimateTest, ExactRationals) {
  TempDir dir("estimate");
  write_file(dir / "hits.jsonl", "[\"A\", null, \"A\"]\n{\"hits\": [0, 1, null, 1], \"g\": 3}\n");
  const auto r = run_cli({"estimate", "--hits", (dir / "hits.jsonl").string(), "-o", (dir / "o.jsonl").string(),
                          "--g", "2", "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_jsonl(dir / "o.jsonl");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0]["exact"]["f1"], "5/9");
  EXPECT_EQ(rows[0]["exact"]["recall"], "1/2");
  EXPECT_EQ(rows[0]["exact"]["precision"], "2/3");
  EXPECT_EQ(rows[1]["g"], 3);
}

TEST(CliEstimateTest, SubsetLargerThanListIsConfigError) {
  TempDir dir("estimate");
  write_file(dir / "hits.jsonl", "[0, null]\n");
  const auto r = run_cli({"estimate", "--hits", (dir / "hits.jsonl").string(), "-o", (dir / "o.jsonl").string(),
                          "--g", "1", "--k", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("k'"), std::string::npos);
}

TEST(CliAdvantagesTest, NormalizesGroups) {
  TempDir dir("adv");
  write_file(dir / "in.jsonl", "{\"group_id\": \"g1\", \"rewards\": [0.1, 0.8, 0.1, 1.0]}\n"
                               "{\"group_id\": \"g2\", \"rewards\": [0.5, 0.5]}\n");
  const auto r = run_cli({"advantages", "-i", (dir / "in.jsonl").string(), "-o", (dir / "o.jsonl").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_jsonl(dir / "o.jsonl");
  ASSERT_EQ(rows.size(), 2u);
  const auto adv = rows[0]["advantages"].get<std::vector<double>>();
  const auto [mean, sd] = altqa::testing::two_pass_mean_std(adv);
  EXPECT_NEAR(mean, 0, 1e-12);
  EXPECT_NEAR(sd, 1, 1e-12);
  EXPECT_EQ(rows[1]["advantages"], nlohmann::json({0.0, 0.0}));
}

TEST(CliParseTest, LintsRolloutsAndFlagsFailures) {
  TempDir dir("parse");
  nlohmann::json good = {{"question_id", "q1"}, {"question", "?"}, {"dialect", "instruct"},
                         {"raw", read_file(fixture_path("rollouts/musique_case_1.txt"))}};
  nlohmann::json bad = good;
  bad["raw"] = read_file(fixture_path("rollouts/verbatim/musique_case_1.txt"));
  write_file(dir / "in.jsonl", good.dump() + "\n");
  auto r = run_cli({"parse", "-i", (dir / "in.jsonl").string(), "-o", (dir / "o.jsonl").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = read_jsonl(dir / "o.jsonl");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["answers"], nlohmann::json({"Oliver Leaman", "George Sarton"}));
  EXPECT_EQ(rows[0]["tool_calls"], 5);
  EXPECT_EQ(rows[0]["loss_mask_spans"].size(), 5u);

  write_file(dir / "in.jsonl", good.dump() + "\n" + bad.dump() + "\n");
  r = run_cli({"parse", "-i", (dir / "in.jsonl").string(), "-o", (dir / "o.jsonl").string()});
  EXPECT_EQ(r.code, 1);
  rows = read_jsonl(dir / "o.jsonl");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NE(rows[1]["error"].get<std::string>().find("UnbalancedTags"), std::string::npos);
}

TEST(CliRetrieverTest, BuildThenQuery) {
  TempDir dir("retriever");
  auto r = run_cli({"retriever", "build", "--corpus", fixture_path("retriever/five_chunks.jsonl").string(),
                    "--index", (dir / "index.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  r = run_cli({"retriever", "query", "--index", (dir / "index.json").string(), "-q",
               "testosterone hormone cholesterol", "--top-k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto body = nlohmann::json::parse(r.out);
  EXPECT_EQ(body["results"][0]["title"], "Testosterone");
  r = run_cli({"retriever", "query", "--index", (dir / "index.json").string(), "-q", "cortisol", "--format",
               "passages"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.starts_with("Cortisol\n")) << r.out;
  EXPECT_EQ(run_cli({"retriever", "query", "--index", (dir / "missing.json").string(), "-q", "x"}).code, 3);
}

class CliPipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    altqa::testing::write_synthetic_corpus(altqa::testing::make_synthetic_corpus(12, 99), dir_ / "manifest.jsonl",
                                           dir_ / "traj.jsonl");
  }

  CliResult pipeline(const std::string& out, std::vector<std::string> extra = {}) {
    std::vector<std::string> args = {"pipeline",     "--manifest", (dir_ / "manifest.jsonl").string(),
                                     "--trajectories", (dir_ / "traj.jsonl").string(),
                                     "--output-dir", (dir_ / out).string(), "--mock", "--mock-dissent", "0.3"};
    args.insert(args.end(), extra.begin(), extra.end());
    return run_cli(args);
  }

  std::size_t alternatives(const std::string& out) {
    std::size_t n = 0;
    for (const auto& row : read_jsonl(dir_ / out / "dataset.jsonl")) n += row["answers"].size() - 1;
    return n;
  }

  TempDir dir_{"pipeline"};
};

TEST_F(CliPipelineTest, DeterministicAcrossRunsAndWorkers) {
  ASSERT_EQ(pipeline("a").code, 0);
  ASSERT_EQ(pipeline("b", {"--workers", "3"}).code, 0);
  for (const char* f : {"dataset.jsonl", "stats.json", "candidates.jsonl"}) {
    EXPECT_EQ(read_file(dir_ / "a" / f), read_file(dir_ / "b" / f)) << f;
  }
  const auto stats = nlohmann::json::parse(read_file(dir_ / "a" / "stats.json"));
  EXPECT_EQ(stats["questions"], 12);
}

TEST_F(CliPipelineTest, StricterThresholdNeverAddsAnswers) {
  ASSERT_EQ(pipeline("eta3", {"--eta", "3"}).code, 0);
  ASSERT_EQ(pipeline("eta4", {"--eta", "4"}).code, 0);
  EXPECT_LE(alternatives("eta4"), alternatives("eta3"));
}

TEST_F(CliPipelineTest, InputAndConfigErrors) {
  auto r = run_cli({"pipeline", "--manifest", (dir_ / "nope.jsonl").string(), "--trajectories",
                    (dir_ / "traj.jsonl").string(), "--output-dir", (dir_ / "x").string(), "--mock"});
  EXPECT_EQ(r.code, 3) << r.err;
  EXPECT_EQ(pipeline("x", {"--eta", "5"}).code, 2);
  r = run_cli({"pipeline", "--manifest", (dir_ / "manifest.jsonl").string(), "--trajectories",
               (dir_ / "traj.jsonl").string(), "--output-dir", (dir_ / "x").string()});
  EXPECT_EQ(r.code, 2) << "no judges configured";
}

TEST_F(CliPipelineTest, UnreachableJudgesExitFour) {
  const auto r = run_cli({"pipeline", "--manifest", (dir_ / "manifest.jsonl").string(), "--trajectories",
                          (dir_ / "traj.jsonl").string(), "--output-dir", (dir_ / "live").string(),
                          "--judge-url", "http://127.0.0.1:9/v1", "--equivalence-model", "m",
                          "--grouping-model", "m", "--verifier-models", "a", "b", "c", "d",
                          "--judge-max-retries", "0", "--judge-timeout-ms", "200"});
  EXPECT_EQ(r.code, 4) << r.err;
}

}  // namespace
}  // namespace altqa::cli
