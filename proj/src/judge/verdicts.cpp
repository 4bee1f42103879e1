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

#include "altqa/judge/verdicts.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "altqa/common/error.hpp"
#include "altqa/common/text.hpp"

namespace altqa::judge {

std::string_view to_string(Judgement judgement) {
  return judgement == Judgement::kCorrect ? "correct" : "incorrect";
}

std::string_view to_string(EvidenceLabel label) {
  switch (label) {
    case EvidenceLabel::kSupported:
      return "SUPPORTED";
    case EvidenceLabel::kPartiallySupported:
      return "PARTIALLY_SUPPORTED";
    case EvidenceLabel::kNotSupported:
      return "NOT_SUPPORTED";
  }
  return "NOT_SUPPORTED";
}

EvidenceLabel evidence_label_from_string(std::string_view text) {
  std::string upper(text::trim(text));
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (auto label : {EvidenceLabel::kSupported, EvidenceLabel::kPartiallySupported,
                     EvidenceLabel::kNotSupported}) {
    if (upper == to_string(label)) return label;
  }
  throw Error(ErrorCode::kMalformedVerdict, "unknown evidence label '" + std::string(text) + "'");
}

void validate_partition(std::span<const std::string> inputs, const GroupingResult& result) {
  std::map<std::string, long> balance;
  for (const auto& a : inputs) ++balance[a];
  for (const auto& group : result.groups) {
    if (group.empty()) throw Error(ErrorCode::kPartitionViolation, "grouping contains an empty group");
    for (const auto& a : group) {
      auto it = balance.find(a);
      if (it == balance.end()) {
        throw Error(ErrorCode::kPartitionViolation, "grouping introduced unknown answer '" + a + "'");
      }
      if (--it->second < 0) {
        throw Error(ErrorCode::kPartitionViolation, "grouping duplicated answer '" + a + "'");
      }
    }
  }
  for (const auto& [answer, left] : balance) {
    if (left > 0) throw Error(ErrorCode::kPartitionViolation, "grouping dropped answer '" + answer + "'");
  }
}

nlohmann::ordered_json to_json(const EquivalenceVerdict& verdict) {
  nlohmann::ordered_json out;
  out["judgement"] = to_string(verdict.judgement);
  out["rationale"] = verdict.rationale;
  return out;
}

nlohmann::ordered_json to_json(const EvidenceVerdict& verdict) {
  nlohmann::ordered_json out;
  out["verdict"] = to_string(verdict.verdict);
  auto claims = nlohmann::ordered_json::array();
  for (const auto& c : verdict.claims) {
    nlohmann::ordered_json entry;
    entry["claim"] = c.claim;
    entry["status"] = to_string(c.status);
    entry["evidence"] = c.evidence;
    claims.push_back(std::move(entry));
  }
  out["claims_analysis"] = std::move(claims);
  return out;
}

}  // namespace altqa::judge
