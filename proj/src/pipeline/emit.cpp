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

#include "altqa/pipeline/emit.hpp"

#include <algorithm>

#include "altqa/common/jsonl.hpp"

namespace altqa::pipeline {

namespace {

nlohmann::ordered_json answer_entry(const metrics::AnswerKey& key, bool is_reference) {
  nlohmann::ordered_json out;
  out["canonical"] = key.canonical;
  out["aliases"] = std::vector<std::string>(key.aliases.begin(), key.aliases.end());
  out["is_reference"] = is_reference;
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const MinedQuestion& mined) {
  nlohmann::ordered_json out;
  out["question_id"] = mined.question_id;
  out["question"] = mined.question;
  auto answers = nlohmann::ordered_json::array();
  auto provenance = nlohmann::ordered_json::array();
  answers.push_back(answer_entry(mined.reference, true));
  provenance.push_back(mined.reference_provenance);
  for (std::size_t i = 0; i < mined.alternatives.size(); ++i) {
    answers.push_back(answer_entry(mined.alternatives[i], false));
    provenance.push_back(mined.alternative_provenance[i]);
  }
  out["answers"] = std::move(answers);
  out["provenance"] = std::move(provenance);
  return out;
}

std::size_t emit_dataset(std::vector<MinedQuestion> mined, const std::filesystem::path& path) {
  for (const auto& q : mined) validate_mined_question(q);
  std::sort(mined.begin(), mined.end(),
            [](const MinedQuestion& a, const MinedQuestion& b) { return a.question_id < b.question_id; });
  jsonl::Writer writer(path);
  for (const auto& q : mined) writer.write(to_json(q));
  writer.close();
  return writer.count();
}

}  // namespace altqa::pipeline
