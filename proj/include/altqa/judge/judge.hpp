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
#include <string>
#include <string_view>

#include "altqa/judge/verdicts.hpp"

namespace altqa::judge {

// One judge identity serving all three roles. Implementations must be safe to
// call from several threads at once.
class Judge {
 public:
  virtual ~Judge() = default;

  virtual const std::string& id() const = 0;

  // `gold` must be non-empty (kInvalidArgument).
  virtual EquivalenceVerdict judge_equivalence(std::string_view question,
                                               std::span<const std::string> gold,
                                               std::string_view prediction) = 0;

  // `answer` is the candidate under review. LLM-backed judges only see the
  // rollout text, so callers narrow the rollout's final answer to the
  // candidate before calling.
  virtual EvidenceVerdict verify_evidence(std::string_view question, std::string_view rollout_text,
                                          std::string_view answer) = 0;

  // `answers` must be non-empty. The result is always a validated partition.
  virtual GroupingResult group_answers(std::span<const std::string> answers) = 0;
};

}  // namespace altqa::judge
