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

#include <map>
#include <span>
#include <string>
#include <string_view>

namespace altqa::judge {

inline constexpr std::string_view kPromptVersion = "v1";

enum class PromptRole { kEquivalence, kEvidence, kGrouping };

std::string_view to_string(PromptRole role);

// The compiled-in template text for a role.
std::string_view prompt_template(PromptRole role);

// Single left-to-right pass: every "{name}" whose name is a key of `values` is
// replaced by its value. Other braces (the JSON examples inside the templates)
// are copied through, and substituted text is never rescanned.
std::string render_template(std::string_view tmpl, const std::map<std::string, std::string>& values);

// {gt_answer} is rendered as a JSON array of strings.
std::string render_equivalence_prompt(std::string_view question, std::span<const std::string> gold,
                                      std::string_view prediction);

std::string render_evidence_prompt(std::string_view question, std::string_view rollout_full_text);

// {answers} is rendered as a JSON array of strings, one per line.
std::string render_grouping_prompt(std::span<const std::string> answers);

}  // namespace altqa::judge
