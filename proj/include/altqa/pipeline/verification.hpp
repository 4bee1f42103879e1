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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "altqa/judge/judge.hpp"
#include "altqa/pipeline/samples.hpp"

namespace altqa::pipeline {

struct VerificationPolicy {
  std::size_t verifiers = 4;  // K
  std::size_t threshold_eta = 3;

  // Throws kInvalidArgument unless 1 <= threshold_eta <= verifiers.
  void validate() const;
};

// The rollout text shown to an evidence judge for one candidate: the raw
// rollout with its final answer block rewritten to carry only `answer`, so a
// multi-answer rollout is judged one answer at a time.
std::string rollout_text_for_candidate(const rollout::Trajectory& trajectory, std::string_view answer);

// Queries every verifier for every candidate and records the votes in
// verifier order. Failed calls are recorded as error votes (never supported).
// Returns the number of failed calls.
struct VoteTally {
  std::size_t failures = 0;
  std::size_t transport_failures = 0;
};
VoteTally collect_votes(std::vector<CandidateRecord>& candidates, std::string_view question,
                        std::span<judge::Judge* const> verifiers);

// Candidates with at least `threshold_eta` supported votes, marked kVerified.
// Pure, so a vote table can be swept over several thresholds.
std::vector<CandidateRecord> apply_threshold(const std::vector<CandidateRecord>& voted,
                                             std::size_t threshold_eta);

}  // namespace altqa::pipeline
