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
#include <string>
#include <string_view>
#include <vector>

#include "altqa/judge/judge.hpp"
#include "altqa/pipeline/samples.hpp"

namespace altqa::pipeline {

// How a model's rollouts for one question relate to the reference answer.
//   case1: every answer is equivalent to the reference.
//   case2: no answer is equivalent (including "no answer at all").
//   case3: a mix of both.
enum class FilterCase { kCase1, kCase2, kCase3 };

std::string_view to_string(FilterCase c);

struct ModelClassification {
  std::string model;
  FilterCase filter_case = FilterCase::kCase2;
  std::size_t units = 0;         // (trajectory, answer) pairs with a usable answer
  std::size_t equivalent = 0;    // judged equivalent to the reference
  std::size_t judge_errors = 0;  // excluded from classification
};

struct FilterOutcome {
  std::vector<CandidateRecord> t2;  // stage kFiltered, stable order
  std::vector<ModelClassification> models;
  std::size_t units = 0;
  std::size_t judge_errors = 0;
  std::size_t transport_errors = 0;
};

// All (trajectory, answer) units of a question, models in name order, then
// trajectory input order, then answer order. Trajectories without a parseable
// answer contribute nothing; answers that normalize to "" are skipped.
std::vector<CandidateRecord> candidate_units(const QuestionSamples& samples);

// Rule 1: drop units the judge finds equivalent to the reference.
// Rule 2: drop every unit of a case2 model.
// Rule 3: among what is left, keep the first unit per normalized answer.
// Units whose equivalence call fails are excluded and counted, never fatal.
FilterOutcome run_filtering(const QuestionSamples& samples, judge::Judge& equivalence_judge);

}  // namespace altqa::pipeline
