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

#include <string>

#include "altqa/judge/judge.hpp"

namespace altqa::judge {

// Deterministic offline judge for tests and dry runs. Its rules are plain
// string matching and say nothing about how a real judge would rule.
//
//   equivalence: correct iff the prediction normalizes equal to a gold entry.
//   evidence:    SUPPORTED if the normalized answer occurs inside a tool
//                response of the rollout, PARTIALLY_SUPPORTED if it only
//                occurs in reasoning, NOT_SUPPORTED otherwise.
//   grouping:    clusters by normalized equality, in first-appearance order.
//
// With dissent_rate > 0 an evidence verdict is lowered by one level for a
// hash-selected fraction of (judge id, question, rollout, answer) inputs, so
// several mocks with different ids disagree in a reproducible way.
class MockJudge final : public Judge {
 public:
  explicit MockJudge(std::string id, double dissent_rate = 0.0);

  const std::string& id() const override { return id_; }

  EquivalenceVerdict judge_equivalence(std::string_view question, std::span<const std::string> gold,
                                       std::string_view prediction) override;
  EvidenceVerdict verify_evidence(std::string_view question, std::string_view rollout_text,
                                  std::string_view answer) override;
  GroupingResult group_answers(std::span<const std::string> answers) override;

 private:
  bool dissents(std::string_view question, std::string_view rollout_text,
                std::string_view answer) const;

  std::string id_;
  double dissent_rate_;
};

}  // namespace altqa::judge
