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

#include <span>
#include <vector>

namespace altqa::grpo {

// Natural-log Shannon entropy. Zero entries contribute nothing.
// Throws kNotADistribution for negative / non-finite entries or a sum that is
// off from 1 by more than 1e-9.
double token_entropy(std::span<const double> distribution);

// Mean of token_entropy over the per-token distributions of one rollout.
// Throws kEmptyRollout.
double mean_rollout_entropy(std::span<const std::vector<double>> distributions);

// Feedback controller for the entropy-bonus weight: below the target entropy
// the weight grows by `step` (capped at lambda_max), above it the weight
// shrinks by `step` (floored at 0).
struct EntropyControllerState {
  double lambda = 0.0;
  double target = 0.0;
  double step = 2e-3;
  double lambda_max = 1e-2;

  // Throws kInvalidArgument when step <= 0, lambda_max <= 0 or lambda is
  // outside [0, lambda_max].
  void validate() const;

  bool operator==(const EntropyControllerState&) const = default;
};

EntropyControllerState step_entropy_controller(const EntropyControllerState& state,
                                               double observed_entropy);

}  // namespace altqa::grpo
