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

#include "altqa/grpo/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "altqa/common/error.hpp"

namespace altqa::grpo {

double token_entropy(std::span<const double> distribution) {
  if (distribution.empty()) throw Error(ErrorCode::kNotADistribution, "empty distribution");
  double sum = 0.0;
  double h = 0.0;
  for (double p : distribution) {
    if (!std::isfinite(p) || p < 0.0) {
      throw Error(ErrorCode::kNotADistribution, "probabilities must be finite and >= 0");
    }
    sum += p;
    if (p > 0.0) h -= p * std::log(p);
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kNotADistribution, "probabilities sum to " + std::to_string(sum));
  }
  return h;
}

double mean_rollout_entropy(std::span<const std::vector<double>> distributions) {
  if (distributions.empty()) throw Error(ErrorCode::kEmptyRollout, "rollout has no tokens");
  double total = 0.0;
  for (const auto& d : distributions) total += token_entropy(d);
  return total / static_cast<double>(distributions.size());
}

void EntropyControllerState::validate() const {
  if (!(step > 0.0)) throw Error(ErrorCode::kInvalidArgument, "controller step must be > 0");
  if (!(lambda_max > 0.0)) throw Error(ErrorCode::kInvalidArgument, "lambda_max must be > 0");
  if (!(lambda >= 0.0 && lambda <= lambda_max)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must be in [0, lambda_max]");
  }
}

EntropyControllerState step_entropy_controller(const EntropyControllerState& state,
                                               double observed_entropy) {
  state.validate();
  EntropyControllerState next = state;
  if (observed_entropy < state.target) {
    next.lambda = std::min(state.lambda + state.step, state.lambda_max);
  } else if (observed_entropy > state.target) {
    next.lambda = std::max(state.lambda - state.step, 0.0);
  }
  return next;
}

}  // namespace altqa::grpo
