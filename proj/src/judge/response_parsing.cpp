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

#include "altqa/judge/response_parsing.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "altqa/common/error.hpp"
#include "altqa/common/text.hpp"

namespace altqa::judge {

namespace {

using nlohmann::json;

std::optional<json> try_parse(std::string_view s) {
  auto doc = json::parse(s.begin(), s.end(), nullptr, false);
  if (doc.is_discarded()) return std::nullopt;
  return doc;
}

json parse_payload(std::string_view text, char open, char close) {
  const std::string_view block = text::extract_fenced_block(text);
  if (auto doc = try_parse(block)) return *doc;
  for (std::string_view candidate : {block, text}) {
    const auto b = candidate.find(open);
    const auto e = candidate.rfind(close);
    if (b != std::string_view::npos && e != std::string_view::npos && e > b) {
      if (auto doc = try_parse(candidate.substr(b, e - b + 1))) return *doc;
    }
  }
  throw Error(ErrorCode::kParseFailure, "judge response is not valid JSON");
}

std::string lower_trimmed(std::string_view s) {
  std::string out(text::trim(s));
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

EquivalenceVerdict parse_equivalence_response(std::string_view text) {
  const json doc = parse_payload(text, '{', '}');
  if (!doc.is_object()) throw Error(ErrorCode::kParseFailure, "equivalence response is not an object");
  auto it = doc.find("judgement");
  if (it == doc.end() || !it->is_string()) {
    throw Error(ErrorCode::kParseFailure, "equivalence response lacks a string 'judgement'");
  }
  EquivalenceVerdict verdict;
  const std::string label = lower_trimmed(it->get<std::string>());
  if (label == "correct") {
    verdict.judgement = Judgement::kCorrect;
  } else if (label == "incorrect") {
    verdict.judgement = Judgement::kIncorrect;
  } else {
    throw Error(ErrorCode::kMalformedVerdict, "judgement '" + it->get<std::string>() + "' is not correct/incorrect");
  }
  if (auto r = doc.find("rationale"); r != doc.end() && r->is_string()) {
    verdict.rationale = r->get<std::string>();
  }
  return verdict;
}

EvidenceVerdict parse_evidence_response(std::string_view text) {
  const json doc = parse_payload(text, '{', '}');
  if (!doc.is_object()) throw Error(ErrorCode::kParseFailure, "evidence response is not an object");
  auto it = doc.find("verdict");
  if (it == doc.end() || !it->is_string()) {
    throw Error(ErrorCode::kParseFailure, "evidence response lacks a string 'verdict'");
  }
  EvidenceVerdict verdict;
  verdict.verdict = evidence_label_from_string(text::trim(it->get<std::string>()));

  auto claims = doc.find("claims_analysis");
  if (claims == doc.end() || claims->is_null()) return verdict;
  if (!claims->is_array()) throw Error(ErrorCode::kParseFailure, "claims_analysis is not an array");
  for (const auto& c : *claims) {
    if (!c.is_object()) throw Error(ErrorCode::kParseFailure, "claims_analysis entry is not an object");
    ClaimAnalysis claim;
    if (auto f = c.find("claim"); f != c.end() && f->is_string()) claim.claim = f->get<std::string>();
    if (auto f = c.find("status"); f != c.end() && f->is_string()) {
      claim.status = evidence_label_from_string(text::trim(f->get<std::string>()));
    }
    if (auto f = c.find("evidence"); f != c.end() && f->is_array()) {
      for (const auto& e : *f) {
        if (e.is_string()) claim.evidence.push_back(e.get<std::string>());
      }
    }
    verdict.claims.push_back(std::move(claim));
  }
  return verdict;
}

GroupingResult parse_grouping_response(std::string_view text) {
  const json doc = parse_payload(text, '[', ']');
  if (!doc.is_array()) throw Error(ErrorCode::kParseFailure, "grouping response is not an array");
  GroupingResult result;
  for (const auto& group : doc) {
    if (!group.is_array()) throw Error(ErrorCode::kParseFailure, "grouping entry is not an array");
    std::vector<std::string> members;
    for (const auto& a : group) {
      if (!a.is_string()) throw Error(ErrorCode::kParseFailure, "grouping member is not a string");
      members.push_back(a.get<std::string>());
    }
    result.groups.push_back(std::move(members));
  }
  return result;
}

}  // namespace altqa::judge
