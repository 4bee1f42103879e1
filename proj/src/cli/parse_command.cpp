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

#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "altqa/common/jsonl.hpp"
#include "altqa/rollout/codec.hpp"
#include "altqa/rollout/ingest.hpp"
#include "commands.hpp"

namespace altqa::cli {

namespace {

struct ParseOptions {
  std::string input;
  std::string output;
};

nlohmann::ordered_json lint(const rollout::Trajectory& t) {
  nlohmann::ordered_json row;
  row["question_id"] = t.question_id;
  row["dialect"] = rollout::to_string(t.dialect);
  auto kinds = nlohmann::ordered_json::array();
  std::size_t tool_calls = 0;
  for (const auto& s : t.steps) {
    kinds.push_back(rollout::to_string(s.kind));
    tool_calls += s.kind == rollout::StepKind::kToolCall;
  }
  row["steps"] = std::move(kinds);
  row["tool_calls"] = tool_calls;
  try {
    row["answers"] = rollout::extract_answers(t);
  } catch (const Error&) {
    row["answers"] = nullptr;
  }
  const auto verdict = rollout::check_format_validity(t);
  row["format_valid"] = verdict.valid;
  auto violations = nlohmann::ordered_json::array();
  for (auto v : verdict.violations) violations.push_back(rollout::to_string(v));
  row["violations"] = std::move(violations);
  auto warnings = nlohmann::ordered_json::array();
  for (auto w : t.warnings) warnings.push_back(rollout::to_string(w));
  row["warnings"] = std::move(warnings);
  auto mask = nlohmann::ordered_json::array();
  for (const auto& span : rollout::compute_loss_mask_spans(t)) mask.push_back({span.begin, span.end});
  row["loss_mask_spans"] = std::move(mask);
  return row;
}

int run_parse(const ParseOptions& opts, Context& ctx) {
  const auto lines = jsonl::read_lines(opts.input);
  std::optional<jsonl::Writer> writer;
  if (!opts.output.empty()) writer.emplace(opts.output);
  std::size_t ok = 0, failed = 0, invalid = 0;
  for (const auto& line : lines) {
    nlohmann::ordered_json row;
    row["line"] = line.number;
    try {
      const auto doc = nlohmann::json::parse(line.text, nullptr, false);
      if (doc.is_discarded()) throw Error(ErrorCode::kParseFailure, "invalid JSON");
      const auto t = rollout::to_trajectory(rollout::rollout_record_from_json(doc));
      const auto linted = lint(t);
      for (const auto& [key, value] : linted.items()) row[key] = value;
      ++ok;
      invalid += !row["format_valid"].get<bool>();
    } catch (const Error& e) {
      row["error"] = e.what();
      ++failed;
      ctx.err << opts.input << ":" << line.number << ": " << e.what() << '\n';
    }
    if (writer) writer->write(row);
  }
  if (writer) {
    writer->close();
    ctx.out << opts.output << '\n';
  }
  ctx.out << "parsed " << ok << " rollouts (" << invalid << " format-invalid), " << failed
          << " failed to parse\n";
  return failed == 0 ? kExitOk : kExitFindings;
}

}  // namespace

void register_parse(CLI::App& app, Context& ctx) {
  auto opts = std::make_shared<ParseOptions>();
  auto* cmd = app.add_subcommand("parse", "Lint a rollout file: structure, answers and format validity");
  cmd->add_option("-i,--input", opts->input, "Rollout JSON Lines (ingest format)")->required();
  cmd->add_option("-o,--output", opts->output, "Per-rollout lint report (JSON Lines)");
  cmd->callback([&ctx, opts] { ctx.action = [&ctx, opts] { return run_parse(*opts, ctx); }; });
}

}  // namespace altqa::cli
