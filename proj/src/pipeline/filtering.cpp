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

#include "altqa/pipeline/filtering.hpp"

#include <set>

#include "altqa/common/error.hpp"
#include "altqa/metrics/normalize.hpp"
#include "altqa/rollout/codec.hpp"

namespace altqa::pipeline {

std::string_view to_string(FilterCase c) {
  switch (c) {
    case FilterCase::kCase1:
      return "case1";
    case FilterCase::kCase2:
      return "case2";
    case FilterCase::kCase3:
      return "case3";
  }
  return "case2";
}

std::vector<CandidateRecord> candidate_units(const QuestionSamples& samples) {
  std::vector<CandidateRecord> units;
  for (const auto& [model, list] : samples.by_model) {
    for (const auto& sample : list) {
      std::vector<std::string> answers;
      try {
        answers = rollout::extract_answers(*sample.trajectory);
      } catch (const Error&) {
        continue;
      }
      for (auto& answer : answers) {
        if (metrics::normalize_answer(answer).empty()) continue;
        CandidateRecord unit;
        unit.question_id = samples.entry.question_id;
        unit.trajectory_id = sample.trajectory_id;
        unit.source_model = model;
        unit.trajectory = sample.trajectory;
        unit.answer = std::move(answer);
        units.push_back(std::move(unit));
      }
    }
  }
  return units;
}

FilterOutcome run_filtering(const QuestionSamples& samples, judge::Judge& equivalence_judge) {
  FilterOutcome outcome;
  std::vector<std::string> gold{samples.entry.reference.canonical};
  gold.insert(gold.end(), samples.entry.reference.aliases.begin(), samples.entry.reference.aliases.end());

  std::vector<CandidateRecord> units = candidate_units(samples);
  outcome.units = units.size();

  // Rule 1, remembering per-model tallies for rule 2.
  std::map<std::string, ModelClassification> per_model;
  for (const auto& [model, list] : samples.by_model) per_model[model].model = model;
  std::vector<CandidateRecord> survivors;
  for (auto& unit : units) {
    auto& cls = per_model[unit.source_model];
    bool equivalent = false;
    try {
      equivalent = equivalence_judge
                       .judge_equivalence(samples.entry.question, gold, unit.answer)
                       .judgement == judge::Judgement::kCorrect;
    } catch (const Error& e) {
      ++cls.judge_errors;
      ++outcome.judge_errors;
      if (e.code() == ErrorCode::kTransportFailure) ++outcome.transport_errors;
      continue;
    }
    ++cls.units;
    if (equivalent) {
      ++cls.equivalent;
    } else {
      survivors.push_back(std::move(unit));
    }
  }

  for (auto& [model, cls] : per_model) {
    if (cls.units > 0 && cls.equivalent == cls.units) {
      cls.filter_case = FilterCase::kCase1;
    } else if (cls.equivalent == 0) {
      cls.filter_case = FilterCase::kCase2;
    } else {
      cls.filter_case = FilterCase::kCase3;
    }
    outcome.models.push_back(cls);
  }

  // Rules 2 and 3.
  std::set<std::string> seen;
  for (auto& unit : survivors) {
    if (per_model[unit.source_model].filter_case != FilterCase::kCase3) continue;
    if (!seen.insert(metrics::normalize_answer(unit.answer)).second) continue;
    unit.stage = Stage::kFiltered;
    outcome.t2.push_back(std::move(unit));
  }
  return outcome;
}

}  // namespace altqa::pipeline
