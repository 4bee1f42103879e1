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

namespace altqa::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFindings = 1,  // parse: at least one record failed to lint
  kExitConfig = 2,
  kExitIngest = 3,
  kExitJudgeExhausted = 4,
};

struct MetricParams {
  double alpha = 0.4;
  std::size_t k = 3;
  std::size_t k_prime = 6;

  // Throws Error(kInvalidArgument) naming the violated constraint
  // (alpha in [0, 1], 1 <= k <= k').
  void validate() const;
};

struct JudgeSettings {
  bool mock = false;
  double mock_dissent = 0.0;
  std::string url;  // base URL shared by every live judge unless overridden
  std::string equivalence_model;
  std::string grouping_model;
  std::vector<std::string> verifier_models;  // K entries
  std::vector<std::string> verifier_urls;    // empty or K entries
  long timeout_ms = 60'000;
  int max_retries = 3;
  long backoff_ms = 500;
  std::size_t max_in_flight = 8;
  std::string api_key_env = "ALTQA_JUDGE_API_KEY";
};

struct RunConfig {
  std::string manifest;
  std::string trajectories;
  std::string output_dir;
  std::size_t threshold_eta = 3;
  std::size_t verifiers = 4;
  JudgeSettings judges;
  std::size_t workers = 1;
  double max_transport_failure_fraction = 0.05;

  // Throws Error(kInvalidArgument): 1 <= eta <= K, K >= 1, workers >= 1,
  // a mock or live judge setup that names K verifiers, fraction in [0, 1].
  void validate() const;
};

// SIGINT/SIGTERM set the returned flag instead of killing the process.
const std::atomic<bool>& install_interrupt_flag();

}  // namespace altqa::cli
