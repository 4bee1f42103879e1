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

#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "altqa/common/jsonl.hpp"
#include "altqa/metrics/estimator.hpp"
#include "altqa/metrics/matching.hpp"
#include "altqa/metrics/reward.hpp"
#include "commands.hpp"

namespace altqa::cli {

namespace {

struct ScoreOptions {
  std::string predictions;
  std::string output;
  std::string summary;
  MetricParams metrics;
  bool at_k = false;
};

struct ScoredLine {
  nlohmann::ordered_json row;
  double precision = 0, recall = 0, f1 = 0, reward = 0;
  std::optional<metrics::AtKEstimate> at_k;
};

ScoredLine score_line(const nlohmann::json& doc, const ScoreOptions& opts) {
  if (!doc.is_object()) throw Error(ErrorCode::kParseFailure, "record is not an object");
  auto qid = doc.find("question_id");
  if (qid == doc.end() || !qid->is_string()) throw Error(ErrorCode::kParseFailure, "missing string question_id");
  auto preds_it = doc.find("predictions");
  if (preds_it == doc.end() || !preds_it->is_array()) {
    throw Error(ErrorCode::kParseFailure, "missing predictions array");
  }
  std::vector<std::string> preds;
  for (const auto& p : *preds_it) {
    if (!p.is_string()) throw Error(ErrorCode::kParseFailure, "predictions must be strings");
    preds.push_back(p.get<std::string>());
  }
  auto ref = doc.find("reference");
  if (ref == doc.end()) throw Error(ErrorCode::kParseFailure, "missing reference");
  std::vector<metrics::AnswerKey> keys{metrics::answer_key_from_json(*ref)};
  if (auto alts = doc.find("alternatives"); alts != doc.end() && !alts->is_null()) {
    if (!alts->is_array()) throw Error(ErrorCode::kParseFailure, "alternatives must be an array");
    for (const auto& a : *alts) keys.push_back(metrics::answer_key_from_json(a));
  }
  rollout::FormatVerdict verdict;
  verdict.valid = true;
  if (auto fv = doc.find("format_valid"); fv != doc.end() && !fv->is_null()) {
    if (!fv->is_boolean()) throw Error(ErrorCode::kParseFailure, "format_valid must be a boolean");
    verdict.valid = fv->get<bool>();
  }

  const auto match = metrics::match_predictions(preds, keys);
  const auto triple = metrics::score(match);
  metrics::RewardParams params;
  params.alpha = opts.metrics.alpha;

  ScoredLine out;
  out.precision = triple.precision;
  out.recall = triple.recall;
  out.f1 = triple.f1;
  out.reward = metrics::reward(verdict, triple, match.hits, params);
  out.row["question_id"] = qid->get<std::string>();
  out.row["precision"] = out.precision;
  out.row["recall"] = out.recall;
  out.row["f1"] = out.f1;
  out.row["reward"] = out.reward;
  if (opts.at_k) {
    if (preds.size() == opts.metrics.k_prime) {
      out.at_k = metrics::estimate_at_k(match.assignments, keys.size(), opts.metrics.k);
      out.row["at_k"] = {{"k", opts.metrics.k},
                         {"precision", out.at_k->precision},
                         {"recall", out.at_k->recall},
                         {"f1", out.at_k->f1}};
    } else {
      out.row["at_k"] = nullptr;
    }
  }
  return out;
}

int run_score(const ScoreOptions& opts, Context& ctx) {
  opts.metrics.validate();
  const auto lines = jsonl::read_lines(opts.predictions);

  jsonl::Writer writer(opts.output);
  auto errors = nlohmann::ordered_json::array();
  double sp = 0, sr = 0, sf = 0, sw = 0;
  double kp = 0, kr = 0, kf = 0;
  std::size_t rows = 0, k_rows = 0;
  for (const auto& line : lines) {
    std::optional<ScoredLine> scored;
    try {
      const auto doc = nlohmann::json::parse(line.text, nullptr, false);
      if (doc.is_discarded()) throw Error(ErrorCode::kParseFailure, "invalid JSON");
      scored = score_line(doc, opts);
    } catch (const Error& e) {
      ctx.err << opts.predictions << ":" << line.number << ": " << e.what() << '\n';
      errors.push_back({{"line", line.number}, {"error", e.what()}});
      continue;
    }
    writer.write(scored->row);
    ++rows;
    sp += scored->precision;
    sr += scored->recall;
    sf += scored->f1;
    sw += scored->reward;
    if (scored->at_k) {
      ++k_rows;
      kp += scored->at_k->precision;
      kr += scored->at_k->recall;
      kf += scored->at_k->f1;
    }
  }
  writer.close();

  auto mean = [](double sum, std::size_t n) { return n == 0 ? 0.0 : sum / static_cast<double>(n); };
  nlohmann::ordered_json summary;
  summary["rows"] = rows;
  summary["errors"] = errors;
  summary["macro"] = {{"precision", mean(sp, rows)},
                      {"recall", mean(sr, rows)},
                      {"f1", mean(sf, rows)},
                      {"reward", mean(sw, rows)}};
  if (opts.at_k) {
    summary["at_k"] = {{"k", opts.metrics.k},
                       {"k_prime", opts.metrics.k_prime},
                       {"rows", k_rows},
                       {"precision", mean(kp, k_rows)},
                       {"recall", mean(kr, k_rows)},
                       {"f1", mean(kf, k_rows)}};
  }
  if (!opts.summary.empty()) jsonl::write_json_file(opts.summary, summary);

  ctx.out << opts.output << '\n';
  ctx.out << "scored " << rows << " questions, " << errors.size() << " errors; macro f1 "
          << mean(sf, rows) << ", reward " << mean(sw, rows) << '\n';
  return kExitOk;
}

}  // namespace

void register_score(CLI::App& app, Context& ctx) {
  auto opts = std::make_shared<ScoreOptions>();
  auto* cmd = app.add_subcommand("score", "Score predictions against answer keys (precision, recall, F1, reward)");
  cmd->add_option("--predictions", opts->predictions, "JSON Lines of {question_id, predictions, reference, alternatives}")
      ->required();
  cmd->add_option("-o,--output", opts->output, "Per-question report (JSON Lines)")->required();
  cmd->add_option("--summary", opts->summary, "Macro averages and per-line errors (JSON)");
  cmd->add_option("--alpha", opts->metrics.alpha, "Reward F1 weight")->capture_default_str();
  cmd->add_flag("--at-k", opts->at_k, "Also estimate @k for lines with exactly k' predictions");
  cmd->add_option("--k", opts->metrics.k, "Subset size for @k")->capture_default_str();
  cmd->add_option("--k-prime", opts->metrics.k_prime, "Predictions per question for @k")->capture_default_str();
  cmd->callback([&ctx, opts] { ctx.action = [&ctx, opts] { return run_score(*opts, ctx); }; });
}

}  // namespace altqa::cli
