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

#include "altqa/rollout/trajectory.hpp"

#include "altqa/common/error.hpp"

namespace altqa::rollout {

std::string_view to_string(Dialect dialect) {
  return dialect == Dialect::kInstruct ? "instruct" : "base";
}

Dialect dialect_from_string(std::string_view name) {
  if (name == "instruct") return Dialect::kInstruct;
  if (name == "base") return Dialect::kBase;
  throw Error(ErrorCode::kUnknownDialect, "unknown dialect '" + std::string(name) + "'");
}

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::kReasoning: return "reasoning";
    case StepKind::kToolCall: return "tool_call";
    case StepKind::kToolResponse: return "tool_response";
    case StepKind::kAnswer: return "answer";
  }
  return "unknown";
}

TagPair tags_for(Dialect dialect, StepKind kind) {
  switch (kind) {
    case StepKind::kReasoning:
      return {"<think>", "</think>"};
    case StepKind::kToolCall:
      return dialect == Dialect::kInstruct ? TagPair{"<tool_call>", "</tool_call>"}
                                           : TagPair{"<search>", "</search>"};
    case StepKind::kToolResponse:
      return dialect == Dialect::kInstruct ? TagPair{"<tool_response>", "</tool_response>"}
                                           : TagPair{"<result>", "</result>"};
    case StepKind::kAnswer:
      return {"<answer>", "</answer>"};
  }
  return {"", ""};
}

std::string_view to_string(ParseWarning warning) {
  switch (warning) {
    case ParseWarning::kMoreThanThreeAnswers: return "more_than_three_answers";
  }
  return "unknown";
}

}  // namespace altqa::rollout
