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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altqa/rollout/trajectory.hpp"

namespace altqa::rollout {

// Splits raw rollout text into action steps. Text outside recognised tags
// (chat-template markers, blank lines) is kept in `raw` but is not a step.
// The first matching close tag ends a block. Tool-response payloads are
// opaque; any other block that contains an open tag is reported as unbalanced.
//
// Throws kEmptyInput, kUnbalancedTags (open tag never closed or closed only
// after another open tag, or a close tag with no open), kOrphanToolResponse
// (tool response not directly after a tool call). Answer payloads that do not parse leave ActionStep::answer empty
// rather than failing; check_format_validity reports them.
//
// The returned trajectory has no question metadata and terminated_cleanly is
// derived from ends_with_closed_answer().
Trajectory parse_trajectory(std::string_view raw, Dialect dialect);
Trajectory parse_trajectory(std::string_view raw, std::string_view dialect_name);

// Instruct: a JSON object {"rationale"?: string, "answers": [string, ...]},
// fenced or bare, with no other keys. Base: the last \boxed{...} split on ';'.
std::optional<AnswerBlock> parse_answer_payload(std::string_view payload, Dialect dialect);

// Canonical payload text for an answer block; parse_answer_payload inverts it.
std::string render_answer_payload(const AnswerBlock& block, Dialect dialect);

// True when the text ends with </answer>, ignoring trailing whitespace and
// end-of-turn markers such as <|im_end|>.
bool ends_with_closed_answer(std::string_view raw);

enum class FormatViolation {
  kNoToolCall,
  kNoReasoningBlock,
  kMissingOrMultipleAnswer,
  kUnparseableAnswer,
  kNoTerminator,
};

std::string_view to_string(FormatViolation violation);

struct FormatVerdict {
  bool valid = false;
  std::vector<FormatViolation> violations;

  bool has(FormatViolation v) const;
};

// Valid iff: a tool call directly followed by a non-empty tool response, at
// least one reasoning block, exactly one answer step that parsed and is the
// final step, and clean termination.
FormatVerdict check_format_validity(const Trajectory& trajectory);

// Answers of the (single or last) answer step, verbatim. Throws kNoAnswerBlock.
std::vector<std::string> extract_answers(const Trajectory& trajectory);

// Rebuilds the raw text from the steps and the inter-step text. Throws
// kDialectMismatch, kInvalidTrajectory (no steps, spans out of order, a span
// whose text disagrees with its step, or other broken invariants).
std::string serialize_trajectory(const Trajectory& trajectory, Dialect dialect);

// Spans of tool-response blocks, tags included; sorted and disjoint.
std::vector<Span> compute_loss_mask_spans(const Trajectory& trajectory);

// Search query carried by a tool-call step: the "query" argument of the
// instruct JSON call, or the trimmed text of a base <search> block.
std::optional<std::string> tool_call_query(const ActionStep& step, Dialect dialect);

// Assembles well-formed trajectories step by step, tracking spans.
class TrajectoryBuilder {
 public:
  explicit TrajectoryBuilder(Dialect dialect, std::string separator = "\n");

  TrajectoryBuilder& text(std::string_view verbatim);
  TrajectoryBuilder& reasoning(std::string_view payload);
  TrajectoryBuilder& tool_call(std::string_view payload);
  TrajectoryBuilder& tool_response(std::string_view payload);
  TrajectoryBuilder& answer(const AnswerBlock& block);
  TrajectoryBuilder& answer_payload(std::string_view payload);
  TrajectoryBuilder& terminated(bool clean);

  Trajectory build() const;

 private:
  TrajectoryBuilder& step(StepKind kind, std::string_view payload);

  Trajectory trajectory_;
  std::string separator_;
  std::optional<bool> terminated_;
};

}  // namespace altqa::rollout
