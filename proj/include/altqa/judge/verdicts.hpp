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
#include <vector>

#include <nlohmann/json.hpp>

namespace altqa::judge {

enum class Judgement { kCorrect, kIncorrect };

std::string_view to_string(Judgement judgement);

struct EquivalenceVerdict {
  Judgement judgement = Judgement::kIncorrect;
  std::string rationale;

  bool operator==(const EquivalenceVerdict&) const = default;
};

enum class EvidenceLabel { kSupported, kPartiallySupported, kNotSupported };

// Wire form: "SUPPORTED", "PARTIALLY_SUPPORTED", "NOT_SUPPORTED".
std::string_view to_string(EvidenceLabel label);

// Case-insensitive, surrounding whitespace ignored. Throws kMalformedVerdict
// for anything else.
EvidenceLabel evidence_label_from_string(std::string_view text);

struct ClaimAnalysis {
  std::string claim;
  EvidenceLabel status = EvidenceLabel::kNotSupported;
  std::vector<std::string> evidence;

  bool operator==(const ClaimAnalysis&) const = default;
};

struct EvidenceVerdict {
  EvidenceLabel verdict = EvidenceLabel::kNotSupported;
  std::vector<ClaimAnalysis> claims;  // stored as received, unused downstream

  bool operator==(const EvidenceVerdict&) const = default;
};

struct GroupingResult {
  std::vector<std::vector<std::string>> groups;

  bool operator==(const GroupingResult&) const = default;
};

// Every input must appear in exactly one group, verbatim, with multiplicity
// preserved, and no group may be empty. Throws kPartitionViolation.
void validate_partition(std::span<const std::string> inputs, const GroupingResult& result);

nlohmann::ordered_json to_json(const EquivalenceVerdict& verdict);
nlohmann::ordered_json to_json(const EvidenceVerdict& verdict);

}  // namespace altqa::judge
