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
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "altqa/pipeline/runner.hpp"

namespace altqa::pipeline {

struct CaseTally {
  std::size_t case1 = 0;
  std::size_t case2 = 0;
  std::size_t case3 = 0;

  std::size_t total() const { return case1 + case2 + case3; }
};

struct DatasetAmbiguity {
  std::size_t questions = 0;
  std::size_t with_alternatives = 0;

  double ratio() const;
};

struct PipelineStats {
  std::size_t questions = 0;  // processed questions
  std::size_t t1_trajectories = 0;
  std::size_t t2_trajectories = 0;  // distinct trajectories behind T2 candidates
  std::size_t t3_trajectories = 0;
  std::size_t t2_candidates = 0;
  std::size_t t3_candidates = 0;
  std::size_t equivalence_errors = 0;
  std::size_t verifier_errors = 0;
  std::size_t grouping_flagged = 0;
  std::map<std::string, CaseTally> cases_by_model;
  CaseTally cases_total;
  std::map<std::size_t, std::size_t> answer_multiplicity;  // |answers| -> questions
  std::map<std::string, DatasetAmbiguity> ambiguity;       // by source_dataset
  std::size_t threshold_eta = 0;
  std::size_t verifiers = 0;
  bool incomplete = false;

  // Percentage of the previous stage kept; empty when the previous stage is 0.
  std::optional<double> t2_retention_percent() const;
  std::optional<double> t3_retention_percent() const;
};

PipelineStats compute_stats(const PipelineResult& result);

// Includes display strings such as "9.4% of those from the previous step".
nlohmann::ordered_json to_json(const PipelineStats& stats);

}  // namespace altqa::pipeline
