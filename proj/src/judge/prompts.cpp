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

#include "altqa/judge/prompts.hpp"

#include <nlohmann/json.hpp>

#include "altqa/judge/prompt_assets.hpp"

namespace altqa::judge {

namespace {

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::string json_string_array(std::span<const std::string> items, int indent) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : items) arr.push_back(s);
  return arr.dump(indent);
}

}  // namespace

std::string_view to_string(PromptRole role) {
  switch (role) {
    case PromptRole::kEquivalence:
      return "equivalence";
    case PromptRole::kEvidence:
      return "evidence";
    case PromptRole::kGrouping:
      return "grouping";
  }
  return "equivalence";
}

std::string_view prompt_template(PromptRole role) {
  switch (role) {
    case PromptRole::kEquivalence:
      return assets::kEquivalence;
    case PromptRole::kEvidence:
      return assets::kEvidence;
    case PromptRole::kGrouping:
      return assets::kGrouping;
  }
  return assets::kEquivalence;
}

std::string render_template(std::string_view tmpl, const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      std::size_t j = i + 1;
      while (j < tmpl.size() && is_name_char(tmpl[j])) ++j;
      if (j < tmpl.size() && tmpl[j] == '}' && j > i + 1) {
        auto it = values.find(std::string(tmpl.substr(i + 1, j - i - 1)));
        if (it != values.end()) {
          out += it->second;
          i = j + 1;
          continue;
        }
      }
    }
    out += tmpl[i++];
  }
  return out;
}

std::string render_equivalence_prompt(std::string_view question, std::span<const std::string> gold,
                                      std::string_view prediction) {
  return render_template(prompt_template(PromptRole::kEquivalence),
                         {{"question", std::string(question)},
                          {"gt_answer", json_string_array(gold, -1)},
                          {"pred_answer", std::string(prediction)}});
}

std::string render_evidence_prompt(std::string_view question, std::string_view rollout_full_text) {
  return render_template(prompt_template(PromptRole::kEvidence),
                         {{"question", std::string(question)},
                          {"rollout_full_text", std::string(rollout_full_text)}});
}

std::string render_grouping_prompt(std::span<const std::string> answers) {
  return render_template(prompt_template(PromptRole::kGrouping),
                         {{"answers", json_string_array(answers, 2)}});
}

}  // namespace altqa::judge
