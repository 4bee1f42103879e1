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

#include "altqa/cli/config.hpp"

#include <csignal>

#include "altqa/common/error.hpp"

namespace altqa::cli {

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_interrupt(int) { g_interrupted.store(true); }

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, message);
}

}  // namespace

void MetricParams::validate() const {
  require(alpha >= 0.0 && alpha <= 1.0, "alpha must be in [0, 1]");
  require(k >= 1, "k must be >= 1");
  require(k <= k_prime, "k must be <= k' (k=" + std::to_string(k) + ", k'=" + std::to_string(k_prime) + ")");
}

void RunConfig::validate() const {
  require(!manifest.empty(), "manifest path is required");
  require(!trajectories.empty(), "trajectories path is required");
  require(!output_dir.empty(), "output directory is required");
  require(verifiers >= 1, "K (verifiers) must be >= 1");
  require(threshold_eta >= 1 && threshold_eta <= verifiers,
          "eta must satisfy 1 <= eta <= K (eta=" + std::to_string(threshold_eta) +
              ", K=" + std::to_string(verifiers) + ")");
  require(workers >= 1, "workers must be >= 1");
  require(max_transport_failure_fraction >= 0.0 && max_transport_failure_fraction <= 1.0,
          "max transport failure fraction must be in [0, 1]");
  if (judges.mock) {
    require(judges.mock_dissent >= 0.0 && judges.mock_dissent <= 1.0, "mock dissent must be in [0, 1]");
    return;
  }
  require(!judges.url.empty(), "live judges need a judge URL (or enable mock mode)");
  require(!judges.equivalence_model.empty(), "live judges need an equivalence model");
  require(!judges.grouping_model.empty(), "live judges need a grouping model");
  require(judges.verifier_models.size() == verifiers,
          "expected " + std::to_string(verifiers) + " verifier models, got " +
              std::to_string(judges.verifier_models.size()));
  require(judges.verifier_urls.empty() || judges.verifier_urls.size() == verifiers,
          "verifier URLs must be empty or list one URL per verifier");
  require(judges.timeout_ms > 0, "judge timeout must be > 0");
  require(judges.max_retries >= 0, "max retries must be >= 0");
  require(judges.backoff_ms >= 0, "backoff must be >= 0");
  require(judges.max_in_flight >= 1, "max in-flight must be >= 1");
}

const std::atomic<bool>& install_interrupt_flag() {
  std::signal(SIGINT, on_interrupt);
  std::signal(SIGTERM, on_interrupt);
  return g_interrupted;
}

}  // namespace altqa::cli
