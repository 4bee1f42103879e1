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

#include "altqa/pipeline/stats.hpp"

#include <cstdio>
#include <set>

namespace altqa::pipeline {

namespace {

std::optional<double> percent(std::size_t part, std::size_t whole) {
  if (whole == 0) return std::nullopt;
  return 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

nlohmann::ordered_json retention_json(std::optional<double> pct) {
  nlohmann::ordered_json out;
  if (!pct) {
    out["percent"] = nullptr;
    out["display"] = "n/a (previous step is empty)";
    return out;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f%% of those from the previous step", *pct);
  out["percent"] = *pct;
  out["display"] = buf;
  return out;
}

nlohmann::ordered_json tally_json(const CaseTally& t) {
  nlohmann::ordered_json out;
  out["case1"] = t.case1;
  out["case2"] = t.case2;
  out["case3"] = t.case3;
  return out;
}

std::size_t distinct_trajectories(const std::vector<CandidateRecord>& candidates) {
  std::set<std::string> ids;
  for (const auto& c : candidates) ids.insert(c.trajectory_id);
  return ids.size();
}

}  // namespace

double DatasetAmbiguity::ratio() const {
  return questions == 0 ? 0.0 : static_cast<double>(with_alternatives) / static_cast<double>(questions);
}

std::optional<double> PipelineStats::t2_retention_percent() const {
  return percent(t2_trajectories, t1_trajectories);
}

std::optional<double> PipelineStats::t3_retention_percent() const {
  return percent(t3_trajectories, t2_trajectories);
}

PipelineStats compute_stats(const PipelineResult& result) {
  PipelineStats stats;
  stats.threshold_eta = result.threshold_eta;
  stats.verifiers = result.verifiers;
  stats.incomplete = result.incomplete;
  for (const auto& q : result.questions) {
    if (!q.processed) continue;
    ++stats.questions;
    stats.t1_trajectories += q.t1;
    stats.t2_trajectories += distinct_trajectories(q.filter.t2);
    stats.t3_trajectories += distinct_trajectories(q.t3);
    stats.t2_candidates += q.filter.t2.size();
    stats.t3_candidates += q.t3.size();
    stats.equivalence_errors += q.filter.judge_errors;
    stats.verifier_errors += q.votes.failures;
    stats.grouping_flagged += q.mined.grouping_flagged;
    for (const auto& m : q.filter.models) {
      for (CaseTally* t : {&stats.cases_by_model[m.model], &stats.cases_total}) {
        switch (m.filter_case) {
          case FilterCase::kCase1:
            ++t->case1;
            break;
          case FilterCase::kCase2:
            ++t->case2;
            break;
          case FilterCase::kCase3:
            ++t->case3;
            break;
        }
      }
    }
    ++stats.answer_multiplicity[1 + q.mined.alternatives.size()];
    auto& amb = stats.ambiguity[q.source_dataset];
    ++amb.questions;
    amb.with_alternatives += q.mined.alternatives.empty() ? 0 : 1;
  }
  return stats;
}

nlohmann::ordered_json to_json(const PipelineStats& stats) {
  nlohmann::ordered_json out;
  out["incomplete"] = stats.incomplete;
  out["questions"] = stats.questions;
  out["threshold_eta"] = stats.threshold_eta;
  out["verifiers"] = stats.verifiers;

  nlohmann::ordered_json stages;
  stages["t1_trajectories"] = stats.t1_trajectories;
  stages["t2_trajectories"] = stats.t2_trajectories;
  stages["t3_trajectories"] = stats.t3_trajectories;
  stages["t2_candidates"] = stats.t2_candidates;
  stages["t3_candidates"] = stats.t3_candidates;
  stages["filtering_retention"] = retention_json(stats.t2_retention_percent());
  stages["verification_retention"] = retention_json(stats.t3_retention_percent());
  out["stages"] = std::move(stages);

  nlohmann::ordered_json cases;
  cases["total"] = tally_json(stats.cases_total);
  nlohmann::ordered_json by_model = nlohmann::ordered_json::object();
  for (const auto& [model, tally] : stats.cases_by_model) by_model[model] = tally_json(tally);
  cases["by_model"] = std::move(by_model);
  out["filter_cases"] = std::move(cases);

  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [n, count] : stats.answer_multiplicity) hist[std::to_string(n)] = count;
  out["answer_multiplicity"] = std::move(hist);

  nlohmann::ordered_json amb = nlohmann::ordered_json::object();
  for (const auto& [source, a] : stats.ambiguity) {
    nlohmann::ordered_json entry;
    entry["questions"] = a.questions;
    entry["with_alternatives"] = a.with_alternatives;
    entry["ambiguity_ratio"] = a.ratio();
    amb[source] = std::move(entry);
  }
  out["ambiguity"] = std::move(amb);

  nlohmann::ordered_json errors;
  errors["equivalence"] = stats.equivalence_errors;
  errors["verification"] = stats.verifier_errors;
  errors["grouping_flagged_questions"] = stats.grouping_flagged;
  out["judge_errors"] = std::move(errors);
  return out;
}

}  // namespace altqa::pipeline
