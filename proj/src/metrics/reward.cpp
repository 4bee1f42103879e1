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

#include "altqa/metrics/reward.hpp"

#include "altqa/common/error.hpp"

namespace altqa::metrics {

void RewardParams::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be in [0, 1]");
  }
}

double reward(const rollout::FormatVerdict& verdict, const ScoreTriple& triple, std::size_t hits,
              const RewardParams& params) {
  params.validate();
  if (!verdict.valid) return RewardParams::kInvalidReward;
  if (hits == 0) return RewardParams::kZeroHitReward;
  return 1.0 - params.alpha * (1.0 - triple.f1);
}

}  // namespace altqa::metrics
