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

#include "altqa/grpo/advantage.hpp"

#include <algorithm>
#include <cmath>

#include "altqa/common/error.hpp"

namespace altqa::grpo {

std::vector<double> normalize_advantages(std::span<const double> rewards) {
  if (rewards.empty()) throw Error(ErrorCode::kInvalidArgument, "rollout group is empty");
  for (double r : rewards) {
    if (!std::isfinite(r)) throw Error(ErrorCode::kInvalidArgument, "rewards must be finite");
  }
  const double n = static_cast<double>(rewards.size());
  double mean = 0.0;
  for (double r : rewards) mean += r;
  mean /= n;
  double var = 0.0;
  for (double r : rewards) var += (r - mean) * (r - mean);
  const double std = std::sqrt(var / n);

  std::vector<double> out(rewards.size(), 0.0);
  if (std < kStdFloor) return out;
  for (std::size_t i = 0; i < rewards.size(); ++i) out[i] = (rewards[i] - mean) / std;
  return out;
}

double clipped_surrogate_term(double ratio, double advantage, double epsilon) {
  if (!(ratio > 0.0)) throw Error(ErrorCode::kInvalidArgument, "ratio must be positive");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be in (0, 1)");
  }
  const double clipped = std::clamp(ratio, 1.0 - epsilon, 1.0 + epsilon);
  return std::min(ratio * advantage, clipped * advantage);
}

}  // namespace altqa::grpo
