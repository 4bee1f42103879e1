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

#include "altqa/rollout/codec.hpp"

#include <algorithm>
#include <array>

#include <nlohmann/json.hpp>

#include "altqa/common/error.hpp"
#include "altqa/common/text.hpp"

namespace altqa::rollout {

namespace {

constexpr std::array<StepKind, 4> kAllKinds = {StepKind::kReasoning, StepKind::kToolCall,
                                               StepKind::kToolResponse, StepKind::kAnswer};

struct TagHit {
  std::size_t offset = std::string_view::npos;
  StepKind kind = StepKind::kReasoning;
  bool closing = false;
};

// Earliest recognised open or close tag at or after `from`.
TagHit next_tag(std::string_view raw, std::size_t from, Dialect dialect) {
  TagHit best;
  for (StepKind kind : kAllKinds) {
    const TagPair tags = tags_for(dialect, kind);
    const std::size_t open = raw.find(tags.open, from);
    if (open < best.offset) best = {open, kind, false};
    const std::size_t close = raw.find(tags.close, from);
    if (close < best.offset) best = {close, kind, true};
  }
  return best;
}

std::vector<ParseWarning> warnings_for(const std::vector<ActionStep>& steps) {
  std::vector<ParseWarning> warnings;
  for (const ActionStep& step : steps) {
    if (step.answer && step.answer->answers.size() > kRequestedAnswerLimit) {
      warnings.push_back(ParseWarning::kMoreThanThreeAnswers);
      break;
    }
  }
  return warnings;
}

std::optional<AnswerBlock> parse_instruct_answer(std::string_view payload) {
  const std::string_view body = text::extract_fenced_block(payload);
  const nlohmann::json doc = nlohmann::json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  AnswerBlock block;
  bool have_answers = false;
  for (const auto& [key, value] : doc.items()) {
    if (key == "rationale") {
      if (!value.is_string()) return std::nullopt;
      block.rationale = value.get<std::string>();
    } else if (key == "answers") {
      if (!value.is_array() || value.empty()) return std::nullopt;
      for (const auto& item : value) {
        if (!item.is_string()) return std::nullopt;
        block.answers.push_back(item.get<std::string>());
      }
      have_answers = true;
    } else {
      return std::nullopt;
    }
  }
  if (!have_answers) return std::nullopt;
  return block;
}

std::optional<AnswerBlock> parse_base_answer(std::string_view payload) {
  constexpr std::string_view kBoxed = "\\boxed{";
  const std::size_t at = payload.rfind(kBoxed);
  if (at == std::string_view::npos) return std::nullopt;
  const std::size_t body = at + kBoxed.size();
  int depth = 1;
  std::size_t i = body;
  for (; i < payload.size(); ++i) {
    if (payload[i] == '{') {
      ++depth;
    } else if (payload[i] == '}') {
      if (--depth == 0) break;
    }
  }
  if (depth != 0) return std::nullopt;
  const std::string_view content = payload.substr(body, i - body);
  AnswerBlock block;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t semi = content.find(';', start);
    if (semi == std::string_view::npos) semi = content.size();
    const std::string_view part = text::trim(content.substr(start, semi - start));
    if (!part.empty()) block.answers.emplace_back(part);
    start = semi + 1;
  }
  if (block.answers.empty()) return std::nullopt;
  return block;
}

[[noreturn]] void invalid(const std::string& why) {
  throw Error(ErrorCode::kInvalidTrajectory, why);
}

}  // namespace

Trajectory parse_trajectory(std::string_view raw, Dialect dialect) {
  if (text::trim(raw).empty()) throw Error(ErrorCode::kEmptyInput, "rollout text is empty");

  Trajectory out;
  out.dialect = dialect;
  out.raw = std::string(raw);

  std::size_t pos = 0;
  while (true) {
    const TagHit hit = next_tag(raw, pos, dialect);
    if (hit.offset == std::string_view::npos) break;
    const TagPair tags = tags_for(dialect, hit.kind);
    if (hit.closing) {
      throw Error(ErrorCode::kUnbalancedTags, std::string(tags.close) + " at offset " +
                                                  std::to_string(hit.offset) +
                                                  " has no matching " + std::string(tags.open));
    }
    const std::size_t body = hit.offset + tags.open.size();
    const std::size_t close = raw.find(tags.close, body);
    if (close == std::string_view::npos) {
      throw Error(ErrorCode::kUnbalancedTags, std::string(tags.open) + " at offset " +
                                                  std::to_string(hit.offset) + " is never closed");
    }
    // Model-written blocks may not contain another step's open tag: that
    // means this block's close tag is missing and a later one was matched.
    // Tool responses are retrieved text and stay opaque.
    if (hit.kind != StepKind::kToolResponse) {
      const std::string_view inner = raw.substr(0, close);
      for (StepKind kind : kAllKinds) {
        const std::size_t nested = inner.find(tags_for(dialect, kind).open, body);
        if (nested != std::string_view::npos) {
          throw Error(ErrorCode::kUnbalancedTags, std::string(tags.open) + " at offset " +
                                                      std::to_string(hit.offset) + " is not closed before " +
                                                      std::string(tags_for(dialect, kind).open) + " at offset " +
                                                      std::to_string(nested));
        }
      }
    }
    if (hit.kind == StepKind::kToolResponse &&
        (out.steps.empty() || out.steps.back().kind != StepKind::kToolCall)) {
      throw Error(ErrorCode::kOrphanToolResponse,
                  std::string(tags.open) + " at offset " + std::to_string(hit.offset) +
                      " does not follow a tool call");
    }
    ActionStep step;
    step.kind = hit.kind;
    step.payload = std::string(raw.substr(body, close - body));
    step.span = {hit.offset, close + tags.close.size()};
    if (step.kind == StepKind::kAnswer) step.answer = parse_answer_payload(step.payload, dialect);
    pos = step.span.end;
    out.steps.push_back(std::move(step));
  }

  out.warnings = warnings_for(out.steps);
  out.terminated_cleanly = ends_with_closed_answer(raw);
  return out;
}

Trajectory parse_trajectory(std::string_view raw, std::string_view dialect_name) {
  return parse_trajectory(raw, dialect_from_string(dialect_name));
}

std::optional<AnswerBlock> parse_answer_payload(std::string_view payload, Dialect dialect) {
  return dialect == Dialect::kInstruct ? parse_instruct_answer(payload)
                                       : parse_base_answer(payload);
}

std::string render_answer_payload(const AnswerBlock& block, Dialect dialect) {
  if (dialect == Dialect::kBase) {
    return " The final answer is \\[ \\boxed{" + text::join(block.answers, "; ") + "} \\] ";
  }
  nlohmann::ordered_json doc;
  doc["rationale"] = block.rationale;
  doc["answers"] = block.answers;
  return "\n```json\n" + doc.dump(2) + "\n```\n";
}

bool ends_with_closed_answer(std::string_view raw) {
  static constexpr std::array<std::string_view, 3> kEndMarkers = {"<|im_end|>", "<|endoftext|>",
                                                                  "</s>"};
  std::string_view tail = text::trim(raw);
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (std::string_view marker : kEndMarkers) {
      if (tail.ends_with(marker)) {
        tail = text::trim(tail.substr(0, tail.size() - marker.size()));
        stripped = true;
      }
    }
  }
  return tail.ends_with("</answer>");
}

std::string_view to_string(FormatViolation violation) {
  switch (violation) {
    case FormatViolation::kNoToolCall: return "no_tool_call";
    case FormatViolation::kNoReasoningBlock: return "no_reasoning_block";
    case FormatViolation::kMissingOrMultipleAnswer: return "missing_or_multiple_answer";
    case FormatViolation::kUnparseableAnswer: return "unparseable_answer";
    case FormatViolation::kNoTerminator: return "no_terminator";
  }
  return "unknown";
}

bool FormatVerdict::has(FormatViolation v) const {
  return std::find(violations.begin(), violations.end(), v) != violations.end();
}

FormatVerdict check_format_validity(const Trajectory& trajectory) {
  const auto& steps = trajectory.steps;
  FormatVerdict verdict;

  bool successful_call = false;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (steps[i].kind == StepKind::kToolCall && steps[i + 1].kind == StepKind::kToolResponse &&
        !text::trim(steps[i + 1].payload).empty()) {
      successful_call = true;
      break;
    }
  }
  if (!successful_call) verdict.violations.push_back(FormatViolation::kNoToolCall);

  const bool reasoning = std::any_of(steps.begin(), steps.end(), [](const ActionStep& s) {
    return s.kind == StepKind::kReasoning;
  });
  if (!reasoning) verdict.violations.push_back(FormatViolation::kNoReasoningBlock);

  const auto answers = std::count_if(steps.begin(), steps.end(), [](const ActionStep& s) {
    return s.kind == StepKind::kAnswer;
  });
  const bool answer_is_last = !steps.empty() && steps.back().kind == StepKind::kAnswer;
  if (answers != 1) {
    verdict.violations.push_back(FormatViolation::kMissingOrMultipleAnswer);
  } else {
    const auto it = std::find_if(steps.begin(), steps.end(), [](const ActionStep& s) {
      return s.kind == StepKind::kAnswer;
    });
    if (!it->answer) verdict.violations.push_back(FormatViolation::kUnparseableAnswer);
  }

  if (!trajectory.terminated_cleanly || (answers == 1 && !answer_is_last)) {
    verdict.violations.push_back(FormatViolation::kNoTerminator);
  }

  verdict.valid = verdict.violations.empty();
  return verdict;
}

std::vector<std::string> extract_answers(const Trajectory& trajectory) {
  for (auto it = trajectory.steps.rbegin(); it != trajectory.steps.rend(); ++it) {
    if (it->kind == StepKind::kAnswer && it->answer) return it->answer->answers;
  }
  throw Error(ErrorCode::kNoAnswerBlock, "trajectory has no parseable answer block");
}

std::string serialize_trajectory(const Trajectory& trajectory, Dialect dialect) {
  if (trajectory.dialect != dialect) {
    throw Error(ErrorCode::kDialectMismatch,
                "trajectory is " + std::string(to_string(trajectory.dialect)) +
                    ", requested " + std::string(to_string(dialect)));
  }
  const auto& steps = trajectory.steps;
  const std::string& raw = trajectory.raw;
  if (steps.empty()) invalid("trajectory has no steps");

  std::string out;
  out.reserve(raw.size());
  std::size_t cursor = 0;
  std::size_t answer_steps = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const ActionStep& step = steps[i];
    if (step.span.begin < cursor || step.span.end < step.span.begin || step.span.end > raw.size()) {
      invalid("step " + std::to_string(i) + " span is out of order or outside raw text");
    }
    if (step.kind == StepKind::kToolResponse &&
        (i == 0 || steps[i - 1].kind != StepKind::kToolCall)) {
      invalid("step " + std::to_string(i) + " is a tool response without a preceding tool call");
    }
    if (step.kind == StepKind::kAnswer) {
      ++answer_steps;
      if (i + 1 != steps.size()) invalid("answer step is not the final step");
      if (step.answer != parse_answer_payload(step.payload, dialect)) {
        invalid("answer block disagrees with its payload");
      }
    }
    const TagPair tags = tags_for(dialect, step.kind);
    std::string rendered;
    rendered.reserve(tags.open.size() + step.payload.size() + tags.close.size());
    rendered.append(tags.open).append(step.payload).append(tags.close);
    if (std::string_view(raw).substr(step.span.begin, step.span.size()) != rendered) {
      invalid("step " + std::to_string(i) + " does not match its span in the raw text");
    }
    out.append(raw, cursor, step.span.begin - cursor);
    out += rendered;
    cursor = step.span.end;
  }
  if (answer_steps > 1) invalid("more than one answer step");
  out.append(raw, cursor, std::string::npos);
  return out;
}

std::vector<Span> compute_loss_mask_spans(const Trajectory& trajectory) {
  std::vector<Span> spans;
  for (const ActionStep& step : trajectory.steps) {
    if (step.kind == StepKind::kToolResponse) spans.push_back(step.span);
  }
  return spans;
}

std::optional<std::string> tool_call_query(const ActionStep& step, Dialect dialect) {
  if (step.kind != StepKind::kToolCall) return std::nullopt;
  if (dialect == Dialect::kBase) {
    const std::string_view q = text::trim(step.payload);
    if (q.empty()) return std::nullopt;
    return std::string(q);
  }
  const nlohmann::json call = nlohmann::json::parse(text::trim(step.payload), nullptr, false);
  if (call.is_discarded() || !call.is_object()) return std::nullopt;
  const auto args = call.find("arguments");
  if (args == call.end() || !args->is_object()) return std::nullopt;
  const auto query = args->find("query");
  if (query == args->end() || !query->is_string()) return std::nullopt;
  return query->get<std::string>();
}

TrajectoryBuilder::TrajectoryBuilder(Dialect dialect, std::string separator)
    : separator_(std::move(separator)) {
  trajectory_.dialect = dialect;
}

TrajectoryBuilder& TrajectoryBuilder::text(std::string_view verbatim) {
  trajectory_.raw += verbatim;
  return *this;
}

TrajectoryBuilder& TrajectoryBuilder::step(StepKind kind, std::string_view payload) {
  if (!trajectory_.steps.empty()) trajectory_.raw += separator_;
  const TagPair tags = tags_for(trajectory_.dialect, kind);
  ActionStep s;
  s.kind = kind;
  s.payload = std::string(payload);
  s.span.begin = trajectory_.raw.size();
  trajectory_.raw.append(tags.open).append(payload).append(tags.close);
  s.span.end = trajectory_.raw.size();
  if (kind == StepKind::kAnswer) s.answer = parse_answer_payload(s.payload, trajectory_.dialect);
  trajectory_.steps.push_back(std::move(s));
  return *this;
}

TrajectoryBuilder& TrajectoryBuilder::reasoning(std::string_view payload) {
  return step(StepKind::kReasoning, payload);
}

TrajectoryBuilder& TrajectoryBuilder::tool_call(std::string_view payload) {
  return step(StepKind::kToolCall, payload);
}

TrajectoryBuilder& TrajectoryBuilder::tool_response(std::string_view payload) {
  return step(StepKind::kToolResponse, payload);
}

TrajectoryBuilder& TrajectoryBuilder::answer(const AnswerBlock& block) {
  return step(StepKind::kAnswer, render_answer_payload(block, trajectory_.dialect));
}

TrajectoryBuilder& TrajectoryBuilder::answer_payload(std::string_view payload) {
  return step(StepKind::kAnswer, payload);
}

TrajectoryBuilder& TrajectoryBuilder::terminated(bool clean) {
  terminated_ = clean;
  return *this;
}

Trajectory TrajectoryBuilder::build() const {
  Trajectory out = trajectory_;
  out.warnings = warnings_for(out.steps);
  out.terminated_cleanly = terminated_.value_or(ends_with_closed_answer(out.raw));
  return out;
}

}  // namespace altqa::rollout
