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

// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "altqa/cli/app.hpp"
#include "altqa/common/error.hpp"
#include "altqa/common/text.hpp"
#include "altqa/grpo/advantage.hpp"
#include "altqa/grpo/entropy.hpp"
#include "altqa/judge/mock_judge.hpp"
#include "altqa/metrics/estimator.hpp"
#include "altqa/metrics/matching.hpp"
#include "altqa/metrics/reward.hpp"
#include "altqa/pipeline/filtering.hpp"
#include "altqa/pipeline/runner.hpp"
#include "altqa/retriever/corpus.hpp"
#include "altqa/retriever/index.hpp"
#include "altqa/retriever/service.hpp"
#include "altqa/rollout/codec.hpp"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

namespace {

using namespace altqa;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    if (!detail.empty()) detail += "; ";
    pass = false;
    detail += why;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

// 1. Counting estimator against subset enumeration for every hits list.
Outcome estimator_sweep() {
  Outcome out;
  const auto start = Clock::now();
  std::size_t cases = 0;
  double worst = 0;
  for (std::size_t g = 1; g <= 4; ++g) {
    for (std::size_t n = 1; n <= 8; ++n) {
      std::vector<std::size_t> digits(n, 0);  // 0 = miss, d = key d-1
      while (true) {
        std::vector<metrics::HitEntry> hits;
        for (std::size_t d : digits) hits.push_back(d > 0 ? metrics::HitEntry(d - 1) : std::nullopt);
        const auto tally = altqa::testing::tally_subsets(hits);
        for (std::size_t k = 1; k <= n; ++k) {
          const auto est = metrics::estimate_at_k(hits, g, k);
          const auto oracle = altqa::testing::oracle_at_k_double(tally, g, k);
          const double diff = static_cast<double>(std::max(
              {std::fabs(est.precision - oracle.precision), std::fabs(est.recall - oracle.recall),
               std::fabs(est.f1 - oracle.f1)}));
          worst = std::max(worst, diff);
          ++cases;
        }
        std::size_t i = 0;
        while (i < n && ++digits[i] > g) digits[i++] = 0;
        if (i == n) break;
      }
    }
  }
  const double elapsed = seconds_since(start);
  out.detail = std::to_string(cases) + " cases, max |diff| " + fmt("%.2e", worst) + ", " + fmt("%.1f s", elapsed);
  if (worst > 1e-12) out.fail("max |diff| " + fmt("%.3e", worst) + " exceeds 1e-12");
  if (elapsed >= 60) out.fail("took " + fmt("%.1f s", elapsed));
  return out;
}

// 2. The three-subset example, exactly.
Outcome hand_enumeration() {
  Outcome out;
  using R = metrics::Rational;
  const std::vector<metrics::HitEntry> hits = {0, std::nullopt, 0};
  // {A,-}: p 1/2, r 1/2, f1 1/2.  {A,A}: p 1, r 1/2, f1 2/3.  {-,A}: as {A,-}.
  const R hand_f1 = (R(1, 2) + R(2, 3) + R(1, 2)) / 3;
  const R hand_recall = (R(1, 2) + R(1, 2) + R(1, 2)) / 3;
  const R hand_precision = (R(1, 2) + R(1) + R(1, 2)) / 3;
  const auto exact = metrics::estimate_at_k_exact(hits, 2, 2);
  out.detail = "f1=" + exact.f1.str() + " recall=" + exact.recall.str() + " precision=" + exact.precision.str();
  if (exact.f1 != R(5, 9) || hand_f1 != R(5, 9)) out.fail("f1 " + exact.f1.str() + " != 5/9");
  if (exact.recall != R(1, 2) || hand_recall != R(1, 2)) out.fail("recall " + exact.recall.str() + " != 1/2");
  if (exact.precision != R(2, 3) || hand_precision != R(2, 3)) {
    out.fail("precision " + exact.precision.str() + " != 2/3");
  }
  return out;
}

// 3. Reward branches and fuzzed invariants.
Outcome reward_table() {
  Outcome out;
  const metrics::RewardParams params;  // alpha 0.4
  rollout::FormatVerdict invalid;
  rollout::FormatVerdict valid;
  valid.valid = true;
  if (metrics::reward(invalid, {1, 1, 1}, 1, params) != 0.0) out.fail("invalid format is not 0");
  if (metrics::reward(valid, {0, 0, 0}, 0, params) != 0.1) out.fail("zero hits is not 0.1");
  if (std::fabs(metrics::reward(valid, {0.5, 0.5, 0.5}, 1, params) - 0.8) > 1e-12) out.fail("f1 0.5 is not 0.8");

  altqa::testing::Rng rng(2024);
  const std::vector<std::string> vocab = {"Paris", "paris", "Lyon", "Nice", "Lille", "Metz", "Nantes", "Brest"};
  struct Row {
    double f1;
    double reward;
  };
  std::vector<Row> positive;
  for (int i = 0; i < 1000; ++i) {
    std::vector<metrics::AnswerKey> keys;
    const std::size_t g = 1 + rng.below(3);
    for (std::size_t j = 0; j < g; ++j) keys.push_back({vocab[2 + j * 2 + rng.below(2)], {}});
    std::vector<std::string> preds;
    for (std::size_t j = rng.below(5); j > 0; --j) preds.push_back(vocab[rng.below(vocab.size())]);
    const auto match = metrics::match_predictions(preds, keys);
    const auto triple = metrics::score(match);
    rollout::FormatVerdict verdict;
    verdict.valid = rng.chance(4, 5);
    metrics::RewardParams p;
    p.alpha = rng.chance(1, 2) ? 0.4 : rng.unit();
    const double r = metrics::reward(verdict, triple, match.hits, p);
    if (!(r >= 0.0 && r <= 1.0)) out.fail("reward out of [0, 1]");
    if (!verdict.valid && r != 0.0) out.fail("invalid rollout rewarded");
    if (verdict.valid && match.hits == 0 && r != 0.1) out.fail("zero-hit rollout not 0.1");
    if (verdict.valid && match.hits > 0) {
      if (r < 1.0 - p.alpha - 1e-12) out.fail("hit rollout below 1 - alpha");
      if ((triple.f1 == 1.0) != (r == 1.0)) out.fail("reward 1 iff f1 1 violated");
      if (p.alpha == 0.4) positive.push_back({triple.f1, r});
    }
  }
  std::sort(positive.begin(), positive.end(), [](const Row& a, const Row& b) { return a.f1 < b.f1; });
  for (std::size_t i = 1; i < positive.size(); ++i) {
    if (positive[i].reward + 1e-15 < positive[i - 1].reward) out.fail("reward not monotone in f1");
  }
  if (out.pass) out.detail = "3 branches, 1000 fuzzed cases (" + std::to_string(positive.size()) + " monotonicity points)";
  return out;
}

// 4. Recall per tool call spot checks.
Outcome rptc() {
  Outcome out;
  auto round2 = [](double v) { return std::round(v * 100.0) / 100.0; };
  const double a = round2(metrics::recall_per_tool_call(0.447, 2.16));
  const double b = round2(metrics::recall_per_tool_call(0.512, 4.14));
  out.detail = fmt("%.2f", a) + ", " + fmt("%.2f", b);
  if (a != 0.21) out.fail("0.447 / 2.16 rounds to " + fmt("%.2f", a));
  if (b != 0.12) out.fail("0.512 / 4.14 rounds to " + fmt("%.2f", b));
  return out;
}

// 5. Advantage standardization.
Outcome advantages() {
  Outcome out;
  altqa::testing::Rng rng(77);
  std::size_t groups = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t g = 2 + rng.below(63);
    std::vector<double> r(g);
    for (auto& x : r) x = rng.chance(1, 3) ? 0.1 * static_cast<double>(rng.below(11)) : rng.unit();
    if (std::all_of(r.begin(), r.end(), [&](double x) { return x == r[0]; })) r[0] += 0.5;
    const auto a = grpo::normalize_advantages(r);
    const auto [mean, sd] = altqa::testing::two_pass_mean_std(a);
    if (std::fabs(mean) > 1e-9 || std::fabs(sd - 1.0) > 1e-9) out.fail("group not standardized");

    const double shift = rng.unit() * 20 - 10;
    const double scale = 0.01 + rng.unit() * 100;
    std::vector<double> moved(g);
    for (std::size_t i = 0; i < g; ++i) moved[i] = r[i] * scale + shift;
    const auto b = grpo::normalize_advantages(moved);
    for (std::size_t i = 0; i < g; ++i) {
      if (std::fabs(a[i] - b[i]) > 1e-9) out.fail("shift/scale changed an advantage");
    }
    ++groups;
  }
  for (std::size_t g = 1; g <= 64; g *= 2) {
    const std::vector<double> flat(g, 0.37);
    const auto a = grpo::normalize_advantages(flat);
    if (std::any_of(a.begin(), a.end(), [](double x) { return x != 0.0; })) out.fail("zero-variance group not zero");
  }
  if (out.pass) out.detail = std::to_string(groups) + " fuzzed groups, 7 zero-variance groups";
  return out;
}

// 6. Entropy controller ramp.
Outcome controller_ramp() {
  Outcome out;
  grpo::EntropyControllerState s;
  s.lambda = 0;
  s.step = 2e-3;
  s.lambda_max = 1e-2;
  s.target = 1.0;
  const double expected[] = {0.002, 0.004, 0.006, 0.008, 0.010, 0.010, 0.010, 0.010, 0.010, 0.010};
  std::string seen;
  for (double want : expected) {
    s = grpo::step_entropy_controller(s, 0.5);
    if (!seen.empty()) seen += " ";
    seen += fmt("%.3f", s.lambda);
    if (s.lambda != want) out.fail("lambda " + fmt("%.17g", s.lambda) + " != " + fmt("%.3f", want));
  }
  if (out.pass) out.detail = seen;
  return out;
}

// 7. Codec round trip and the checked-in rollout excerpts.
Outcome codec_round_trip() {
  Outcome out;
  altqa::testing::Rng rng(31337);
  std::size_t trips = 0;
  for (auto dialect : {rollout::Dialect::kInstruct, rollout::Dialect::kBase}) {
    for (int i = 0; i < 10000; ++i) {
      const rollout::Trajectory t = altqa::testing::random_trajectory(rng, dialect);
      const std::string text = rollout::serialize_trajectory(t, dialect);
      if (text != t.raw || rollout::parse_trajectory(text, dialect) != t) {
        out.fail(std::string(rollout::to_string(dialect)) + " trajectory " + std::to_string(i) + " did not round-trip");
        break;
      }
      ++trips;
    }
  }
  const auto expected =
      nlohmann::json::parse(altqa::testing::read_file(altqa::testing::fixture_path("rollouts/expected.json")));
  for (const auto& e : expected) {
    const std::string name = e["file"];
    const auto t = rollout::parse_trajectory(
        altqa::testing::read_file(altqa::testing::fixture_path("rollouts/" + name)), e["dialect"].get<std::string>());
    if (t.steps.size() != e["steps"].get<std::size_t>()) out.fail(name + " step count");
    if (rollout::extract_answers(t) != e["answers"].get<std::vector<std::string>>()) out.fail(name + " answers");
  }
  if (out.pass) {
    out.detail = std::to_string(trips) + " round trips, " + std::to_string(expected.size()) + " excerpts";
  }
  return out;
}

struct CliRun {
  int code;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"altqa"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, err.str()};
}

// 8. Pipeline determinism, threshold monotonicity and stage sizes.
Outcome pipeline_end_to_end() {
  Outcome out;
  const auto start = Clock::now();
  altqa::testing::TempDir dir("acceptance");
  const auto corpus = altqa::testing::make_synthetic_corpus(50, 20240611);
  altqa::testing::write_synthetic_corpus(corpus, dir / "manifest.jsonl", dir / "traj.jsonl");

  auto cli_run = [&](const std::string& name, const std::string& eta) {
    return run_cli({"pipeline", "--manifest", (dir / "manifest.jsonl").string(), "--trajectories",
                    (dir / "traj.jsonl").string(), "--output-dir", (dir / name).string(), "--mock",
                    "--mock-dissent", "0.25", "--verifiers", "4", "--eta", eta});
  };
  for (const char* name : {"run1", "run2"}) {
    const auto r = cli_run(name, "3");
    if (r.code != 0) out.fail(std::string(name) + " exited " + std::to_string(r.code) + ": " + r.err);
  }
  for (const char* f : {"dataset.jsonl", "stats.json", "candidates.jsonl"}) {
    if (altqa::testing::read_file(dir / "run1" / f) != altqa::testing::read_file(dir / "run2" / f)) {
      out.fail(std::string(f) + " differs between runs");
    }
  }

  const auto samples = pipeline::build_sample_set(corpus.manifest, corpus.records);
  judge::MockJudge eq("mock-equivalence");
  judge::MockJudge grouper("mock-grouping");
  std::vector<std::unique_ptr<judge::MockJudge>> verifiers;
  pipeline::JudgePanel panel{&eq, {}, &grouper};
  for (int i = 1; i <= 4; ++i) {
    verifiers.push_back(std::make_unique<judge::MockJudge>("mock-verifier-" + std::to_string(i), 0.25));
    panel.verifiers.push_back(verifiers.back().get());
  }
  std::vector<std::size_t> verified_sizes;
  std::size_t t1 = 0;
  std::size_t t2 = 0;
  for (std::size_t eta = 1; eta <= 4; ++eta) {
    pipeline::RunOptions opts;
    opts.policy = {4, eta};
    const auto result = pipeline::run_pipeline(samples, panel, opts);
    std::size_t verified = 0;
    for (const auto& q : result.questions) {
      std::set<std::string> t2_ids;
      std::set<std::string> t3_ids;
      for (const auto& c : q.filter.t2) t2_ids.insert(c.trajectory_id);
      for (const auto& c : q.t3) t3_ids.insert(c.trajectory_id);
      if (!(t3_ids.size() <= t2_ids.size() && t2_ids.size() <= q.t1)) {
        out.fail(q.question_id + " stage sizes out of order at eta " + std::to_string(eta));
      }
      verified += q.t3.size();
      if (eta == 1) {
        t1 += q.t1;
        t2 += t2_ids.size();
      }
    }
    verified_sizes.push_back(verified);
  }
  for (std::size_t i = 1; i < verified_sizes.size(); ++i) {
    if (verified_sizes[i] > verified_sizes[i - 1]) out.fail("verified set grew with eta");
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 30) out.fail("took " + fmt("%.1f s", elapsed));
  if (out.pass) {
    out.detail = "byte-identical reruns; |T1|=" + std::to_string(t1) + " |T2|=" + std::to_string(t2) +
                 "; verified candidates at eta 1..4:";
    for (auto v : verified_sizes) out.detail += " " + std::to_string(v);
    out.detail += "; " + fmt("%.1f s", elapsed);
  }
  return out;
}

// 9. Filtering taxonomy.
Outcome case_taxonomy() {
  Outcome out;
  pipeline::QuestionSamples s;
  s.entry.question_id = "tax";
  s.entry.question = "Who owns the label?";
  s.entry.reference = {"Warner Music", {}};
  auto add = [&](const std::string& model, const std::vector<std::string>& answers) {
    rollout::TrajectoryBuilder b(rollout::Dialect::kInstruct);
    b.reasoning("search first");
    b.tool_call(R"({"name": "search", "arguments": {"query": "label owner"}})");
    b.tool_response("Doc 1: " + altqa::text::join(answers, ", "));
    b.answer(rollout::AnswerBlock{"", answers});
    pipeline::SampledTrajectory t;
    t.source_model = model;
    t.trajectory_id = "tax:" + model + ":" + std::to_string(s.by_model[model].size());
    t.trajectory = std::make_shared<const rollout::Trajectory>(b.build());
    s.by_model[model].push_back(std::move(t));
  };
  add("all-reference", {"Warner Music"});
  add("all-reference", {"warner music."});
  add("no-reference", {"Sony Music Entertainment"});
  add("no-reference", {"EMI"});
  add("mixed", {"Warner Music", "Sony Music Entertainment"});
  add("mixed", {"sony music entertainment"});
  add("mixed", {"Universal Music", "warner music"});

  judge::MockJudge eq("mock-equivalence");
  const auto outcome = pipeline::run_filtering(s, eq);
  auto case_of = [&](const std::string& model) {
    for (const auto& m : outcome.models) {
      if (m.model == model) return m.filter_case;
    }
    return pipeline::FilterCase::kCase2;
  };
  if (case_of("all-reference") != pipeline::FilterCase::kCase1) out.fail("all-reference model not case 1");
  if (case_of("no-reference") != pipeline::FilterCase::kCase2) out.fail("no-reference model not case 2");
  if (case_of("mixed") != pipeline::FilterCase::kCase3) out.fail("mixed model not case 3");
  std::vector<std::string> kept;
  for (const auto& c : outcome.t2) {
    kept.push_back(c.answer);
    if (c.source_model != "mixed") out.fail("answer kept from " + c.source_model);
  }
  const std::vector<std::string> want = {"Sony Music Entertainment", "Universal Music"};
  if (kept != want) out.fail("kept [" + altqa::text::join(kept, ", ") + "]");
  if (out.pass) out.detail = "case1/case2/case3 classified; kept [" + altqa::text::join(kept, ", ") + "]";
  return out;
}

// 10. Chunking, BM25 fixture and the HTTP contract.
Outcome retriever_contract() {
  Outcome out;
  altqa::testing::Rng rng(404);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<retriever::Document> docs;
    std::size_t total = 0;
    for (std::size_t d = rng.below(5); d > 0; --d) {
      std::string text;
      const std::size_t n = rng.below(400);
      for (std::size_t i = 0; i < n; ++i) text += (rng.chance(1, 5) ? "\n" : " ") + std::string("w") + std::to_string(rng.below(50));
      total += n;
      docs.push_back({"d" + std::to_string(d), "t", text});
    }
    std::size_t counted = 0;
    for (const auto& c : retriever::chunk_corpus(docs, 1 + rng.below(150))) counted += c.word_count;
    if (counted != total) {
      out.fail("chunker lost words");
      break;
    }
  }

  const auto docs = retriever::load_documents(altqa::testing::fixture_path("retriever/five_chunks.jsonl"));
  auto index = std::make_shared<const retriever::RetrievalIndex>(
      retriever::RetrievalIndex::build(retriever::chunk_corpus(docs)));
  const auto expected = nlohmann::json::parse(
      altqa::testing::read_file(altqa::testing::fixture_path("retriever/five_chunks_expected.json")));
  for (const auto& q : expected["queries"]) {
    const auto hits = index->search(q["query"].get<std::string>(), 10);
    bool same = hits.size() == q["ranking"].size();
    for (std::size_t i = 0; same && i < hits.size(); ++i) {
      same = hits[i].chunk_id == q["ranking"][i]["chunk_id"].get<std::uint64_t>() &&
             std::fabs(hits[i].score - q["ranking"][i]["score"].get<double>()) <= 1e-12;
    }
    if (!same) out.fail("ranking mismatch for '" + q["query"].get<std::string>() + "'");
  }

  retriever::RetrieverService service(index);
  service.start("127.0.0.1", 0);
  httplib::Client client("127.0.0.1", service.port());
  const auto top = client.Post("/search", R"({"query": "testosterone hormone cholesterol"})", "application/json");
  if (!top || top->status != 200) {
    out.fail("search request failed");
  } else if (nlohmann::json::parse(top->body)["results"][0]["title"] != "Testosterone") {
    out.fail("wrong top-1");
  }
  for (const char* bad : {"{not json", R"({"top_k": 2})", R"({"query": 5})"}) {
    const auto r = client.Post("/search", bad, "application/json");
    if (!r || r->status != 400) out.fail(std::string("malformed body not rejected: ") + bad);
  }
  service.stop();
  if (out.pass) out.detail = "500 fuzzed corpora, " + std::to_string(expected["queries"].size()) + " fixture queries, top-1 and 400s over HTTP";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"@k estimator equals subset enumeration (k' <= 8, g <= 4)", estimator_sweep},
      {"hand-enumerated @k example is exact", hand_enumeration},
      {"reward branches and fuzzed invariants", reward_table},
      {"recall per tool call spot checks", rptc},
      {"advantage normalization properties", advantages},
      {"entropy controller ramp", controller_ramp},
      {"codec round trip and rollout excerpts", codec_round_trip},
      {"pipeline determinism, eta monotonicity, stage sizes", pipeline_end_to_end},
      {"filtering case taxonomy", case_taxonomy},
      {"retriever contract", retriever_contract},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s  %2zu  %s  (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
