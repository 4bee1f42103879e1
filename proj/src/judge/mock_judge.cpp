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

#include "altqa/judge/mock_judge.hpp"

#include <map>
#include <optional>

#include "altqa/common/error.hpp"
#include "altqa/common/text.hpp"
#include "altqa/metrics/normalize.hpp"
#include "altqa/rollout/codec.hpp"

namespace altqa::judge {

namespace {

// Both dialects share <think> and <answer>, so pick the reading that finds
// the most tool responses.
std::optional<rollout::Trajectory> parse_any(std::string_view text) {
  std::optional<rollout::Trajectory> best;
  std::size_t best_responses = 0;
  for (auto dialect : {rollout::Dialect::kInstruct, rollout::Dialect::kBase}) {
    try {
      auto t = rollout::parse_trajectory(text, dialect);
      std::size_t responses = 0;
      for (const auto& s : t.steps) responses += s.kind == rollout::StepKind::kToolResponse;
      if (!best || responses > best_responses) {
        best = std::move(t);
        best_responses = responses;
      }
    } catch (const Error&) {
    }
  }
  return best;
}

}  // namespace

MockJudge::MockJudge(std::string id, double dissent_rate)
    : id_(std::move(id)), dissent_rate_(dissent_rate) {
  if (!(dissent_rate_ >= 0.0 && dissent_rate_ <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "dissent_rate must be in [0, 1]");
  }
}

EquivalenceVerdict MockJudge::judge_equivalence(std::string_view /*question*/,
                                                std::span<const std::string> gold,
                                                std::string_view prediction) {
  if (gold.empty()) throw Error(ErrorCode::kInvalidArgument, "gold answer list is empty");
  const std::string pred = metrics::normalize_answer(prediction);
  for (const auto& g : gold) {
    if (metrics::normalize_answer(g) == pred) {
      return {Judgement::kCorrect, "normalized match with '" + g + "'"};
    }
  }
  return {Judgement::kIncorrect, "no normalized match"};
}

bool MockJudge::dissents(std::string_view question, std::string_view rollout_text,
                         std::string_view answer) const {
  if (dissent_rate_ <= 0.0) return false;
  std::uint64_t h = text::fnv1a64(id_);
  for (std::string_view part : {question, rollout_text, answer}) {
    h = text::fnv1a64("\x1f", h);
    h = text::fnv1a64(part, h);
  }
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
  return u < dissent_rate_;
}

EvidenceVerdict MockJudge::verify_evidence(std::string_view question, std::string_view rollout_text,
                                           std::string_view answer) {
  EvidenceVerdict verdict;
  verdict.verdict = EvidenceLabel::kNotSupported;
  const std::string needle = metrics::normalize_answer(answer);
  std::string where = "answer not found in rollout";
  if (auto t = parse_any(rollout_text); t && !needle.empty()) {
    bool in_tool = false;
    bool in_reasoning = false;
    for (const auto& step : t->steps) {
      if (step.kind != rollout::StepKind::kToolResponse && step.kind != rollout::StepKind::kReasoning) {
        continue;
      }
      if (metrics::normalize_answer(step.payload).find(needle) == std::string::npos) continue;
      (step.kind == rollout::StepKind::kToolResponse ? in_tool : in_reasoning) = true;
    }
    if (in_tool) {
      verdict.verdict = EvidenceLabel::kSupported;
      where = "answer found in a tool response";
    } else if (in_reasoning) {
      verdict.verdict = EvidenceLabel::kPartiallySupported;
      where = "answer found only in reasoning";
    }
  }
  if (verdict.verdict != EvidenceLabel::kNotSupported && dissents(question, rollout_text, answer)) {
    verdict.verdict = verdict.verdict == EvidenceLabel::kSupported ? EvidenceLabel::kPartiallySupported
                                                                   : EvidenceLabel::kNotSupported;
    where += "; mock dissent applied";
  }
  verdict.claims.push_back({std::string(answer), verdict.verdict, {where}});
  return verdict;
}

GroupingResult MockJudge::group_answers(std::span<const std::string> answers) {
  if (answers.empty()) throw Error(ErrorCode::kInvalidArgument, "no answers to group");
  GroupingResult result;
  std::map<std::string, std::size_t> slot;
  for (const auto& a : answers) {
    auto [it, inserted] = slot.emplace(metrics::normalize_answer(a), result.groups.size());
    if (inserted) result.groups.emplace_back();
    result.groups[it->second].push_back(a);
  }
  return result;
}

}  // namespace altqa::judge
