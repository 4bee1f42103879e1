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
#include <set>
#include <utility>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "altqa/common/jsonl.hpp"
#include "altqa/judge/http_backend.hpp"
#include "altqa/judge/llm_judge.hpp"
#include "altqa/judge/mock_judge.hpp"
#include "altqa/pipeline/emit.hpp"
#include "altqa/pipeline/runner.hpp"
#include "altqa/pipeline/samples.hpp"
#include "altqa/pipeline/stats.hpp"
#include "commands.hpp"

namespace altqa::cli {

namespace {

constexpr int kExitInterrupted = 130;

struct OwnedPanel {
  std::vector<std::unique_ptr<judge::Judge>> owned;
  pipeline::JudgePanel panel;
};

OwnedPanel make_panel(const RunConfig& cfg) {
  OwnedPanel p;
  auto keep = [&p](std::unique_ptr<judge::Judge> j) {
    p.owned.push_back(std::move(j));
    return p.owned.back().get();
  };
  if (cfg.judges.mock) {
    p.panel.equivalence = keep(std::make_unique<judge::MockJudge>("mock-equivalence"));
    p.panel.grouper = keep(std::make_unique<judge::MockJudge>("mock-grouping"));
    for (std::size_t i = 0; i < cfg.verifiers; ++i) {
      p.panel.verifiers.push_back(keep(std::make_unique<judge::MockJudge>(
          "mock-verifier-" + std::to_string(i + 1), cfg.judges.mock_dissent)));
    }
    return p;
  }
  auto endpoint = [&cfg](const std::string& url, const std::string& model) {
    judge::JudgeEndpointConfig e;
    e.base_url = url;
    e.model_name = model;
    e.timeout = std::chrono::milliseconds(cfg.judges.timeout_ms);
    e.max_retries = cfg.judges.max_retries;
    e.backoff_base = std::chrono::milliseconds(cfg.judges.backoff_ms);
    e.api_key_env = cfg.judges.api_key_env;
    e.max_in_flight = cfg.judges.max_in_flight;
    return e;
  };
  auto live = [&](const std::string& id, const std::string& url, const std::string& model) {
    auto e = endpoint(url, model);
    return keep(std::make_unique<judge::LlmJudge>(id, e, std::make_shared<judge::HttpChatBackend>(e)));
  };
  p.panel.equivalence = live("equivalence:" + cfg.judges.equivalence_model, cfg.judges.url,
                             cfg.judges.equivalence_model);
  p.panel.grouper = live("grouping:" + cfg.judges.grouping_model, cfg.judges.url, cfg.judges.grouping_model);
  for (std::size_t i = 0; i < cfg.verifiers; ++i) {
    const std::string& url = cfg.judges.verifier_urls.empty() ? cfg.judges.url : cfg.judges.verifier_urls[i];
    p.panel.verifiers.push_back(live("verifier-" + std::to_string(i + 1) + ":" + cfg.judges.verifier_models[i],
                                     url, cfg.judges.verifier_models[i]));
  }
  return p;
}

nlohmann::ordered_json candidate_json(const pipeline::CandidateRecord& c, bool grouped) {
  nlohmann::ordered_json row;
  row["question_id"] = c.question_id;
  row["trajectory_id"] = c.trajectory_id;
  row["source_model"] = c.source_model;
  row["answer"] = c.answer;
  row["stage"] = pipeline::to_string(grouped ? pipeline::Stage::kGrouped : c.stage);
  row["supported_votes"] = c.supported_votes();
  auto votes = nlohmann::ordered_json::array();
  for (const auto& v : c.votes) {
    nlohmann::ordered_json vote;
    vote["verifier_id"] = v.verifier_id;
    if (v.verdict) {
      vote["verdict"] = judge::to_json(*v.verdict);
    } else {
      vote["verdict"] = nullptr;
      vote["judge_error"] = v.error;
    }
    votes.push_back(std::move(vote));
  }
  row["votes"] = std::move(votes);
  return row;
}

int run_pipeline_command(const RunConfig& cfg, Context& ctx) {
  cfg.validate();
  OwnedPanel panel = make_panel(cfg);

  pipeline::SampleSet samples;
  try {
    samples = pipeline::ingest_samples(cfg.trajectories, pipeline::load_manifest(cfg.manifest));
  } catch (const Error& e) {
    ctx.err << "error: " << e.what() << '\n';
    return kExitIngest;
  }

  pipeline::RunOptions options;
  options.policy.verifiers = cfg.verifiers;
  options.policy.threshold_eta = cfg.threshold_eta;
  options.workers = cfg.workers;
  options.cancel = &install_interrupt_flag();
  const pipeline::PipelineResult result = pipeline::run_pipeline(samples, panel.panel, options);

  const std::filesystem::path dir(cfg.output_dir);
  const auto dataset_path = dir / "dataset.jsonl";
  const auto stats_path = dir / "stats.json";
  const auto candidates_path = dir / "candidates.jsonl";
  const std::size_t written = pipeline::emit_dataset(result.mined(), dataset_path);
  const auto stats = pipeline::compute_stats(result);
  jsonl::write_json_file(stats_path, pipeline::to_json(stats));

  jsonl::Writer candidates(candidates_path);
  for (const auto& q : result.questions) {
    std::set<std::pair<std::string, std::string>> kept;
    for (const auto& c : q.t3) kept.emplace(c.trajectory_id, c.answer);
    for (const auto& c : q.voted) {
      candidates.write(candidate_json(c, kept.count({c.trajectory_id, c.answer}) > 0));
    }
  }
  candidates.close();

  ctx.out << dataset_path.string() << '\n' << stats_path.string() << '\n' << candidates_path.string() << '\n';
  ctx.out << "mined " << written << " questions; trajectories T1=" << stats.t1_trajectories
          << " T2=" << stats.t2_trajectories << " T3=" << stats.t3_trajectories
          << (result.incomplete ? " (incomplete: interrupted)" : "") << '\n';

  const double failed = result.transport_failure_fraction();
  if (failed > cfg.max_transport_failure_fraction) {
    ctx.err << "error: judge transport exhausted for " << failed * 100.0 << "% of candidates (limit "
            << cfg.max_transport_failure_fraction * 100.0 << "%)\n";
    return kExitJudgeExhausted;
  }
  return result.incomplete ? kExitInterrupted : kExitOk;
}

}  // namespace

void register_pipeline(CLI::App& app, Context& ctx) {
  auto cfg = std::make_shared<RunConfig>();
  auto* cmd = app.add_subcommand("pipeline", "Mine alternative answers: filter, verify, group, emit");
  cmd->add_option("--manifest", cfg->manifest, "Question manifest (JSON Lines)");
  cmd->add_option("--trajectories", cfg->trajectories, "Sampled rollouts (JSON Lines, ingest format)");
  cmd->add_option("--output-dir", cfg->output_dir, "Directory for dataset.jsonl, stats.json, candidates.jsonl");
  cmd->add_option("--eta", cfg->threshold_eta, "Supported votes needed to keep a candidate")->capture_default_str();
  cmd->add_option("--verifiers", cfg->verifiers, "Number of evidence verifiers (K)")->capture_default_str();
  cmd->add_option("--workers", cfg->workers, "Questions processed in parallel")->capture_default_str();
  cmd->add_option("--max-transport-failure-fraction", cfg->max_transport_failure_fraction,
                  "Exit 4 when more candidates than this lose a judge call to transport errors")
      ->capture_default_str();
  cmd->add_flag("--mock", cfg->judges.mock, "Use the deterministic offline judges");
  cmd->add_option("--mock-dissent", cfg->judges.mock_dissent,
                  "Fraction of evidence verdicts each mock verifier lowers by one level")
      ->capture_default_str();
  cmd->add_option("--judge-url", cfg->judges.url, "Base URL of a chat-completions endpoint");
  cmd->add_option("--equivalence-model", cfg->judges.equivalence_model, "Model for the equivalence judge");
  cmd->add_option("--grouping-model", cfg->judges.grouping_model, "Model for the grouping judge");
  cmd->add_option("--verifier-models", cfg->judges.verifier_models, "K verifier models");
  cmd->add_option("--verifier-urls", cfg->judges.verifier_urls, "Optional per-verifier base URLs");
  cmd->add_option("--judge-timeout-ms", cfg->judges.timeout_ms, "Per-request timeout")->capture_default_str();
  cmd->add_option("--judge-max-retries", cfg->judges.max_retries, "Retries per judge call")->capture_default_str();
  cmd->add_option("--judge-backoff-ms", cfg->judges.backoff_ms, "Backoff base")->capture_default_str();
  cmd->add_option("--judge-max-in-flight", cfg->judges.max_in_flight, "Concurrent requests per judge")
      ->capture_default_str();
  cmd->add_option("--judge-api-key-env", cfg->judges.api_key_env, "Environment variable holding the API key")
      ->capture_default_str();
  cmd->callback([&ctx, cfg] { ctx.action = [&ctx, cfg] { return run_pipeline_command(*cfg, ctx); }; });
}

}  // namespace altqa::cli
