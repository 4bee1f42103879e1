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
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "altqa/common/jsonl.hpp"
#include "altqa/grpo/advantage.hpp"
#include "commands.hpp"

namespace altqa::cli {

namespace {

struct AdvantageOptions {
  std::string input;
  std::string output;
};

int run_advantages(const AdvantageOptions& opts, Context& ctx) {
  const auto lines = jsonl::read_lines(opts.input);
  jsonl::Writer writer(opts.output);
  std::size_t errors = 0;
  for (const auto& line : lines) {
    nlohmann::ordered_json row;
    try {
      const auto doc = nlohmann::json::parse(line.text, nullptr, false);
      if (doc.is_discarded() || !doc.is_object()) throw Error(ErrorCode::kParseFailure, "record is not a JSON object");
      auto gid = doc.find("group_id");
      auto rewards = doc.find("rewards");
      if (gid == doc.end()) throw Error(ErrorCode::kParseFailure, "missing group_id");
      if (rewards == doc.end() || !rewards->is_array()) throw Error(ErrorCode::kParseFailure, "missing rewards array");
      std::vector<double> r;
      for (const auto& v : *rewards) {
        if (!v.is_number()) throw Error(ErrorCode::kParseFailure, "rewards must be numbers");
        r.push_back(v.get<double>());
      }
      row["group_id"] = *gid;
      row["advantages"] = grpo::normalize_advantages(r);
    } catch (const Error& e) {
      ctx.err << opts.input << ":" << line.number << ": " << e.what() << '\n';
      ++errors;
      continue;
    }
    writer.write(row);
  }
  writer.close();
  ctx.out << opts.output << '\n';
  ctx.out << "normalized " << writer.count() << " groups, " << errors << " errors\n";
  return kExitOk;
}

}  // namespace

void register_advantages(CLI::App& app, Context& ctx) {
  auto opts = std::make_shared<AdvantageOptions>();
  auto* cmd = app.add_subcommand("advantages", "Group-normalized advantages for {group_id, rewards} lines");
  cmd->add_option("-i,--input", opts->input, "JSON Lines of {group_id, rewards}")->required();
  cmd->add_option("-o,--output", opts->output, "JSON Lines of {group_id, advantages}")->required();
  cmd->callback([&ctx, opts] { ctx.action = [&ctx, opts] { return run_advantages(*opts, ctx); }; });
}

}  // namespace altqa::cli
