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

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace altqa::metrics {

// A reference answer with the surface forms that count as the same answer.
struct AnswerKey {
  std::string canonical;
  std::set<std::string> aliases;

  bool operator==(const AnswerKey&) const = default;
};

// Normalised canonical and aliases; empty normal forms are dropped.
std::set<std::string> normalized_forms(const AnswerKey& key);

// Throws kInvariantViolation if the canonical or an alias normalises to the
// empty string, or an alias normalises equal to the canonical.
void validate_answer_key(const AnswerKey& key);

// {"canonical": ..., "aliases": [...]}; aliases optional on input.
AnswerKey answer_key_from_json(const nlohmann::json& doc);
nlohmann::ordered_json to_json(const AnswerKey& key);

struct MatchOutcome {
  // Per prediction: index of the lowest matching key, or nullopt.
  std::vector<std::optional<std::size_t>> assignments;
  std::size_t preds = 0;
  std::size_t refs = 0;
  std::size_t hits = 0;  // distinct keys matched
};

// A prediction matches key i when its normalisation equals the normalisation
// of the canonical or of any alias. Duplicated predictions still count toward
// preds but a key contributes at most one hit. Throws kEmptyReferenceSet.
MatchOutcome match_predictions(std::span<const std::string> predictions,
                               std::span<const AnswerKey> keys);

struct ScoreTriple {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// precision = hits/preds (0 when preds = 0), recall = hits/refs,
// f1 = 2pr/(p+r) when both are positive. Throws kInvalidArgument if refs = 0.
ScoreTriple score(const MatchOutcome& match);

// Recall divided by the mean number of tool calls. Throws kZeroToolCalls.
double recall_per_tool_call(double recall, double mean_tool_calls);

}  // namespace altqa::metrics
