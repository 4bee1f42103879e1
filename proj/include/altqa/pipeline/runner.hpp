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

#include <atomic>
#include <cstddef>
#include <string>
#include <vector>

#include "altqa/judge/judge.hpp"
#include "altqa/pipeline/filtering.hpp"
#include "altqa/pipeline/grouping.hpp"
#include "altqa/pipeline/samples.hpp"
#include "altqa/pipeline/verification.hpp"

namespace altqa::pipeline {

// Judges are borrowed and must outlive the run.
struct JudgePanel {
  judge::Judge* equivalence = nullptr;
  std::vector<judge::Judge*> verifiers;  // K of them
  judge::Judge* grouper = nullptr;
};

struct RunOptions {
  VerificationPolicy policy;
  std::size_t workers = 1;
  // Polled between questions. Once set, no new question starts and the
  // result is marked incomplete.
  const std::atomic<bool>* cancel = nullptr;
};

struct QuestionResult {
  std::string question_id;
  std::string source_dataset;
  bool processed = false;
  std::size_t t1 = 0;  // sampled trajectories
  FilterOutcome filter;
  std::vector<CandidateRecord> voted;  // T2 with votes attached
  std::vector<CandidateRecord> t3;
  VoteTally votes;
  MinedQuestion mined;
  // Units that lost a judge call to transport exhaustion at any stage.
  std::size_t transport_affected = 0;
};

struct PipelineResult {
  std::vector<QuestionResult> questions;  // question_id order
  std::size_t threshold_eta = 0;
  std::size_t verifiers = 0;
  bool incomplete = false;

  // Fraction of candidate units touched by judge transport exhaustion.
  double transport_failure_fraction() const;
  std::vector<MinedQuestion> mined() const;
};

// Throws kInvalidArgument when the panel is incomplete or its verifier count
// differs from policy.verifiers.
void validate_panel(const JudgePanel& panel, const VerificationPolicy& policy);

QuestionResult process_question(const QuestionSamples& samples, const JudgePanel& panel,
                                const VerificationPolicy& policy);

// Questions run in parallel on `workers` threads; results are stored by
// question index, so output does not depend on scheduling.
PipelineResult run_pipeline(const SampleSet& samples, const JudgePanel& panel, const RunOptions& options);

}  // namespace altqa::pipeline
