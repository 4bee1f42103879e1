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

#include <cmath>

#include "altqa/common/error.hpp"
#include "altqa/metrics/estimator.hpp"
#include "altqa/metrics/matching.hpp"
#include "altqa/metrics/normalize.hpp"
#include "altqa/metrics/reward.hpp"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

namespace altqa::metrics {
namespace {

using altqa::testing::enumerate_at_k;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no altqa::Error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(NormalizeTest, FoldsCasePunctuationAndWhitespace) {
  EXPECT_EQ(normalize_answer("  The  PARIS. "), "the paris");
  EXPECT_EQ(normalize_answer("O'Brien"), "obrien");
  EXPECT_EQ(normalize_answer("Île-de-France"), "îledefrance");
  // Root-locale folding: dotted and dotless i stay distinct.
  EXPECT_EQ(normalize_answer("ÇIRAĞAN\tPalace"), "çirağan palace");
  EXPECT_NE(normalize_answer("ÇIRAĞAN"), normalize_answer("çırağan"));
  EXPECT_EQ(normalize_answer("«»!?"), "");
}

TEST(NormalizeTest, Idempotent) {
  altqa::testing::Rng rng(3);
  const std::vector<std::string> pieces = {"A", "b", " ", "\t", ".", "É", "ß", "中", "'", "-", "9", "Σ"};
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    for (std::size_t n = rng.below(12); n > 0; --n) s += pieces[rng.below(pieces.size())];
    const std::string once = normalize_answer(s);
    ASSERT_EQ(normalize_answer(once), once) << s;
  }
}

TEST(AnswerKeyTest, Validation) {
  EXPECT_NO_THROW(validate_answer_key({"Paris", {"City of Light"}}));
  EXPECT_EQ(code_of([] { validate_answer_key({"...", {}}); }), ErrorCode::kInvariantViolation);
  EXPECT_EQ(code_of([] { validate_answer_key({"Paris", {"paris."}}); }), ErrorCode::kInvariantViolation);
  EXPECT_EQ(normalized_forms({"Paris", {"City of Light"}}), (std::set<std::string>{"paris", "city of light"}));
}

TEST(AnswerKeyTest, JsonRoundTrip) {
  const AnswerKey key{"Bonn", {"Bundesstadt Bonn"}};
  EXPECT_EQ(answer_key_from_json(to_json(key)), key);
  EXPECT_EQ(answer_key_from_json(nlohmann::json{{"canonical", "x"}}).aliases.size(), 0u);
}

TEST(MatchTest, DuplicatesCountAsPredictionsButOneHit) {
  const std::vector<std::string> preds = {"Paris", "paris.", "Lyon", "Nice"};
  const std::vector<AnswerKey> keys = {{"Paris", {}}, {"Lyon", {"Lugdunum"}}};
  const auto m = match_predictions(preds, keys);
  EXPECT_EQ(m.preds, 4u);
  EXPECT_EQ(m.refs, 2u);
  EXPECT_EQ(m.hits, 2u);
  EXPECT_EQ(m.assignments[0], 0u);
  EXPECT_EQ(m.assignments[1], 0u);
  EXPECT_EQ(m.assignments[2], 1u);
  EXPECT_FALSE(m.assignments[3].has_value());

  const auto s = score(m);
  EXPECT_DOUBLE_EQ(s.precision, 0.5);
  EXPECT_DOUBLE_EQ(s.recall, 1.0);
  EXPECT_DOUBLE_EQ(s.f1, 2.0 * 0.5 / 1.5);
}

TEST(MatchTest, AliasesMatchAndEmptyPredictionsNever) {
  const std::vector<AnswerKey> keys = {{"Lyon", {"Lugdunum"}}};
  const std::vector<std::string> preds = {"lugdunum", "..."};
  const auto m = match_predictions(preds, keys);
  EXPECT_EQ(m.hits, 1u);
  EXPECT_FALSE(m.assignments[1].has_value());
  EXPECT_EQ(code_of([] { match_predictions(std::vector<std::string>{"x"}, std::vector<AnswerKey>{}); }),
            ErrorCode::kEmptyReferenceSet);
}

TEST(ScoreTest, NoPredictionsScoresZero) {
  const std::vector<AnswerKey> keys = {{"Lyon", {}}};
  const auto s = score(match_predictions(std::vector<std::string>{}, keys));
  EXPECT_EQ(s.precision, 0.0);
  EXPECT_EQ(s.recall, 0.0);
  EXPECT_EQ(s.f1, 0.0);
}

TEST(RewardTest, Branches) {
  rollout::FormatVerdict invalid;
  rollout::FormatVerdict valid;
  valid.valid = true;
  const RewardParams params;
  EXPECT_EQ(reward(invalid, {1, 1, 1}, 1, params), 0.0);
  EXPECT_EQ(reward(valid, {0, 0, 0}, 0, params), 0.1);
  EXPECT_NEAR(reward(valid, {0.5, 0.5, 0.5}, 1, params), 0.8, 1e-15);
  EXPECT_EQ(reward(valid, {1, 1, 1}, 2, params), 1.0);
  RewardParams bad;
  bad.alpha = 1.5;
  EXPECT_EQ(code_of([&] { reward(valid, {1, 1, 1}, 1, bad); }), ErrorCode::kInvalidArgument);
}

TEST(RptcTest, Values) {
  EXPECT_NEAR(recall_per_tool_call(0.447 * 100, 2.16), 20.69, 0.01);
  EXPECT_NEAR(recall_per_tool_call(0.5, 2.0), 0.25, 1e-15);
  EXPECT_EQ(code_of([] { recall_per_tool_call(0.5, 0.0); }), ErrorCode::kZeroToolCalls);
}

TEST(EstimatorTest, HandEnumeratedExample) {
  // Subsets of [A, -, A] with g = 2, k = 2:
  //   {A,-}: p 1/2 r 1/2 f1 1/2; {A,A}: p 1 r 1/2 f1 2/3; {-,A}: as the first.
  const std::vector<HitEntry> hits = {0, std::nullopt, 0};
  const auto exact = estimate_at_k_exact(hits, 2, 2);
  EXPECT_EQ(exact.precision, Rational(2, 3));
  EXPECT_EQ(exact.recall, Rational(1, 2));
  EXPECT_EQ(exact.f1, Rational(5, 9));
}

TEST(EstimatorTest, MatchesEnumerationOracleOnRandomLists) {
  altqa::testing::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(10);
    const std::size_t g = 1 + rng.below(5);
    std::vector<HitEntry> hits;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.chance(1, 3)) {
        hits.push_back(std::nullopt);
      } else {
        hits.push_back(rng.below(g));
      }
    }
    const std::size_t k = 1 + rng.below(n);
    const auto oracle = enumerate_at_k(hits, g, k);
    const auto exact = estimate_at_k_exact(hits, g, k);
    ASSERT_EQ(exact.precision, oracle.precision);
    ASSERT_EQ(exact.recall, oracle.recall);
    ASSERT_EQ(exact.f1, oracle.f1);
    for (auto strategy : {EstimatorStrategy::kCounting, EstimatorStrategy::kEnumeration}) {
      const auto est = estimate_at_k(hits, g, k, strategy);
      ASSERT_NEAR(est.precision, static_cast<double>(oracle.precision), 1e-12);
      ASSERT_NEAR(est.recall, static_cast<double>(oracle.recall), 1e-12);
      ASSERT_NEAR(est.f1, static_cast<double>(oracle.f1), 1e-12);
    }
  }
}

TEST(EstimatorTest, FullDrawEqualsPlainScore) {
  // With k = k' there is one subset, so @k equals the ordinary score.
  const std::vector<HitEntry> hits = {0, 1, std::nullopt, 1};
  const auto est = estimate_at_k(hits, 3, 4);
  EXPECT_DOUBLE_EQ(est.precision, 0.75);
  EXPECT_DOUBLE_EQ(est.recall, 2.0 / 3.0);
  EXPECT_NEAR(est.f1, 2 * 0.75 * (2.0 / 3.0) / (0.75 + 2.0 / 3.0), 1e-15);
}

TEST(EstimatorTest, ArgumentErrors) {
  const std::vector<HitEntry> hits = {0, std::nullopt};
  EXPECT_EQ(code_of([&] { estimate_at_k(hits, 1, 0); }), ErrorCode::kSubsetSizeOutOfRange);
  EXPECT_EQ(code_of([&] { estimate_at_k(hits, 1, 3); }), ErrorCode::kSubsetSizeOutOfRange);
  EXPECT_EQ(code_of([&] { estimate_at_k(hits, 0, 1); }), ErrorCode::kInvalidArgument);
  const std::vector<HitEntry> out_of_range = {2};
  EXPECT_EQ(code_of([&] { estimate_at_k(out_of_range, 2, 1); }), ErrorCode::kInvalidArgument);
}

TEST(EstimatorTest, Guards) {
  const std::vector<HitEntry> medium(26, HitEntry{0});
  EXPECT_EQ(code_of([&] { estimate_at_k(medium, 1, 13, EstimatorStrategy::kEnumeration); }),
            ErrorCode::kEnumerationGuard);
  EXPECT_NO_THROW(estimate_at_k(medium, 1, 13));

  std::vector<HitEntry> huge(300, std::nullopt);
  huge[0] = 0;
  EXPECT_EQ(code_of([&] { estimate_at_k(huge, 1, 150); }), ErrorCode::kBinomialOverflow);
  const auto exact = estimate_at_k_exact(huge, 1, 150);
  EXPECT_EQ(exact.recall, Rational(1, 2));
}

}  // namespace
}  // namespace altqa::metrics
