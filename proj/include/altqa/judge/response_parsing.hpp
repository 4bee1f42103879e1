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

#include <string_view>

#include "altqa/judge/verdicts.hpp"

namespace altqa::judge {

// Response text goes through fenced-block extraction first. When the block
// is not valid JSON the outermost {...} (or [...] for grouping) is tried.
//
// Unparseable text or a wrong shape throws kParseFailure; a well-formed object
// whose label is outside the allowed set throws kMalformedVerdict.

// {"rationale": str, "judgement": "correct" | "incorrect"}; label matching is
// case-insensitive and ignores surrounding whitespace.
EquivalenceVerdict parse_equivalence_response(std::string_view text);

// {"verdict": label, "claims_analysis": [{claim, status, evidence}]}. The
// claims list is optional.
EvidenceVerdict parse_evidence_response(std::string_view text);

// A JSON 2D array of strings. No partition check here.
GroupingResult parse_grouping_response(std::string_view text);

}  // namespace altqa::judge
