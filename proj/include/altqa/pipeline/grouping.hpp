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

#include <string>
#include <vector>

#include "altqa/judge/judge.hpp"
#include "altqa/metrics/matching.hpp"
#include "altqa/pipeline/samples.hpp"

namespace altqa::pipeline {

struct MinedQuestion {
  std::string question_id;
  std::string question;
  std::string source_dataset;
  metrics::AnswerKey reference;
  std::vector<metrics::AnswerKey> alternatives;
  // Sorted trajectory ids backing the reference's mined aliases and each
  // alternative, aligned with `alternatives`.
  std::vector<std::string> reference_provenance;
  std::vector<std::vector<std::string>> alternative_provenance;
  // Set when the grouping judge failed; the candidates were then emitted as
  // singleton keys.
  bool grouping_flagged = false;
  std::string grouping_error;
};

// Longest by code points, ties to the lexicographically smallest.
std::string pick_canonical(const std::vector<std::string>& members);

// Clusters the verified answers of one question. Clusters with a member that
// normalizes into the reference's forms are folded into the reference's
// aliases. Verified candidates are marked kGrouped in place.
MinedQuestion run_grouping(const ManifestEntry& entry, std::vector<CandidateRecord>& verified,
                           judge::Judge& grouper);

// Throws kInvariantViolation when keys share a normalized form, a key is
// malformed, or provenance does not line up with the alternatives.
void validate_mined_question(const MinedQuestion& mined);

}  // namespace altqa::pipeline
