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

#include "altqa/metrics/matching.hpp"
#include "altqa/rollout/codec.hpp"

namespace altqa::metrics {

struct RewardParams {
  static constexpr double kInvalidReward = 0.0;
  static constexpr double kZeroHitReward = 0.1;

  // Margin between a valid-but-wrong rollout and a partially correct one.
  double alpha = 0.4;

  // Throws kInvalidArgument unless alpha is in [0, 1].
  void validate() const;
};

// 0 for invalid format; 0.1 for valid format with no hits;
// 1 - alpha * (1 - f1) otherwise.
double reward(const rollout::FormatVerdict& verdict, const ScoreTriple& triple, std::size_t hits,
              const RewardParams& params);

}  // namespace altqa::metrics
