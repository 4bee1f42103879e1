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

#include "altqa/metrics/matching.hpp"

#include <cmath>

#include "altqa/common/error.hpp"
#include "altqa/metrics/normalize.hpp"

namespace altqa::metrics {

std::set<std::string> normalized_forms(const AnswerKey& key) {
  std::set<std::string> forms;
  if (std::string n = normalize_answer(key.canonical); !n.empty()) forms.insert(std::move(n));
  for (const std::string& alias : key.aliases) {
    if (std::string n = normalize_answer(alias); !n.empty()) forms.insert(std::move(n));
  }
  return forms;
}

void validate_answer_key(const AnswerKey& key) {
  const std::string canonical = normalize_answer(key.canonical);
  if (canonical.empty()) {
    throw Error(ErrorCode::kInvariantViolation,
                "canonical '" + key.canonical + "' is empty after normalization");
  }
  for (const std::string& alias : key.aliases) {
    const std::string n = normalize_answer(alias);
    if (n.empty()) {
      throw Error(ErrorCode::kInvariantViolation,
                  "alias '" + alias + "' is empty after normalization");
    }
    if (n == canonical) {
      throw Error(ErrorCode::kInvariantViolation,
                  "alias '" + alias + "' normalizes to the canonical '" + key.canonical + "'");
    }
  }
}

AnswerKey answer_key_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::kParseFailure, "answer key must be an object");
  const auto canonical = doc.find("canonical");
  if (canonical == doc.end() || !canonical->is_string()) {
    throw Error(ErrorCode::kParseFailure, "answer key needs a string 'canonical'");
  }
  AnswerKey key;
  key.canonical = canonical->get<std::string>();
  if (const auto aliases = doc.find("aliases"); aliases != doc.end() && !aliases->is_null()) {
    if (!aliases->is_array()) throw Error(ErrorCode::kParseFailure, "'aliases' must be an array");
    for (const auto& a : *aliases) {
      if (!a.is_string()) throw Error(ErrorCode::kParseFailure, "aliases must be strings");
      key.aliases.insert(a.get<std::string>());
    }
  }
  return key;
}

nlohmann::ordered_json to_json(const AnswerKey& key) {
  nlohmann::ordered_json doc;
  doc["canonical"] = key.canonical;
  doc["aliases"] = nlohmann::ordered_json::array();
  for (const std::string& a : key.aliases) doc["aliases"].push_back(a);
  return doc;
}

MatchOutcome match_predictions(std::span<const std::string> predictions,
                               std::span<const AnswerKey> keys) {
  if (keys.empty()) throw Error(ErrorCode::kEmptyReferenceSet, "no reference answers given");

  std::vector<std::set<std::string>> forms;
  forms.reserve(keys.size());
  for (const AnswerKey& key : keys) forms.push_back(normalized_forms(key));

  MatchOutcome out;
  out.preds = predictions.size();
  out.refs = keys.size();
  out.assignments.reserve(predictions.size());
  std::vector<bool> matched(keys.size(), false);
  for (const std::string& prediction : predictions) {
    const std::string n = normalize_answer(prediction);
    std::optional<std::size_t> assignment;
    if (!n.empty()) {
      for (std::size_t i = 0; i < forms.size(); ++i) {
        if (forms[i].contains(n)) {
          assignment = i;
          break;
        }
      }
    }
    if (assignment && !matched[*assignment]) {
      matched[*assignment] = true;
      ++out.hits;
    }
    out.assignments.push_back(assignment);
  }
  return out;
}

ScoreTriple score(const MatchOutcome& match) {
  if (match.refs == 0) throw Error(ErrorCode::kInvalidArgument, "score needs refs >= 1");
  ScoreTriple t;
  t.precision = match.preds == 0 ? 0.0
                                 : static_cast<double>(match.hits) / static_cast<double>(match.preds);
  t.recall = static_cast<double>(match.hits) / static_cast<double>(match.refs);
  if (t.precision > 0.0 && t.recall > 0.0) {
    t.f1 = 2.0 * t.precision * t.recall / (t.precision + t.recall);
  }
  return t;
}

double recall_per_tool_call(double recall, double mean_tool_calls) {
  if (!(mean_tool_calls > 0.0) || !std::isfinite(mean_tool_calls)) {
    throw Error(ErrorCode::kZeroToolCalls, "mean tool calls must be positive");
  }
  return recall / mean_tool_calls;
}

}  // namespace altqa::metrics
