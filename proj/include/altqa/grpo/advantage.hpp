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

// Groups whose population standard deviation falls below this get all-zero
// advantages instead of dividing by ~0.
inline constexpr double kStdFloor = 1e-12;

// A_i = (r_i - mean) / std with population statistics over the group.
// Throws kInvalidArgument for an empty group or non-finite rewards.
std::vector<double> normalize_advantages(std::span<const double> rewards);

// min(ratio * A, clip(ratio, 1 - eps, 1 + eps) * A). Throws kInvalidArgument
// unless ratio > 0 and 0 < epsilon < 1.
double clipped_surrogate_term(double ratio, double advantage, double epsilon);

}  // namespace altqa::grpo
