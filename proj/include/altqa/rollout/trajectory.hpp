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
#include <string>
#include <string_view>
#include <vector>

namespace altqa::rollout {

// Text format a rollout was produced in. Instruct rollouts use
// <think>/<tool_call>/<tool_response>/<answer> with a fenced JSON answer;
// base rollouts use <think>/<search>/<result>/<answer> with \boxed{a; b}.
enum class Dialect { kInstruct, kBase };

std::string_view to_string(Dialect dialect);
// Throws kUnknownDialect.
Dialect dialect_from_string(std::string_view name);

enum class StepKind { kReasoning, kToolCall, kToolResponse, kAnswer };

std::string_view to_string(StepKind kind);

struct TagPair {
  std::string_view open;
  std::string_view close;
};

TagPair tags_for(Dialect dialect, StepKind kind);

// Half-open character (byte) interval [begin, end) into Trajectory::raw.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool operator==(const Span&) const = default;
};

struct AnswerBlock {
  std::string rationale;             // empty for base-dialect answers
  std::vector<std::string> answers;  // never empty

  bool operator==(const AnswerBlock&) const = default;
};

// Rollouts are asked for at most this many answers; longer lists still
// parse and carry ParseWarning::kMoreThanThreeAnswers.
inline constexpr std::size_t kRequestedAnswerLimit = 3;

struct ActionStep {
  StepKind kind = StepKind::kReasoning;
  std::string payload;  // verbatim text between the delimiting tags
  Span span;            // covers the tags as well as the payload
  std::optional<AnswerBlock> answer;  // kAnswer steps whose payload parsed

  bool operator==(const ActionStep&) const = default;
};

enum class ParseWarning { kMoreThanThreeAnswers };

std::string_view to_string(ParseWarning warning);

struct Trajectory {
  std::string question_id;
  std::string question;
  Dialect dialect = Dialect::kInstruct;
  std::vector<ActionStep> steps;
  std::string raw;
  bool terminated_cleanly = false;
  std::vector<ParseWarning> warnings;

  bool operator==(const Trajectory&) const = default;
};

}  // namespace altqa::rollout
