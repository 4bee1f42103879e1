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

#include "altqa/pipeline/grouping.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "altqa/common/error.hpp"
#include "altqa/common/text.hpp"
#include "altqa/metrics/normalize.hpp"

namespace altqa::pipeline {

std::string pick_canonical(const std::vector<std::string>& members) {
  if (members.empty()) throw Error(ErrorCode::kInvalidArgument, "empty cluster");
  const std::string* best = &members.front();
  for (const auto& m : members) {
    const auto lm = text::utf8_length(m);
    const auto lb = text::utf8_length(*best);
    if (lm > lb || (lm == lb && m < *best)) best = &m;
  }
  return *best;
}

MinedQuestion run_grouping(const ManifestEntry& entry, std::vector<CandidateRecord>& verified,
                           judge::Judge& grouper) {
  MinedQuestion mined;
  mined.question_id = entry.question_id;
  mined.question = entry.question;
  mined.source_dataset = entry.source_dataset;
  mined.reference = entry.reference;
  if (verified.empty()) return mined;

  std::vector<std::string> answers;
  std::map<std::string, std::vector<std::string>> support;  // answer -> trajectory ids
  for (auto& c : verified) {
    auto& ids = support[c.answer];
    if (ids.empty()) answers.push_back(c.answer);
    ids.push_back(c.trajectory_id);
    c.stage = Stage::kGrouped;
  }

  std::vector<std::vector<std::string>> clusters;
  try {
    clusters = grouper.group_answers(answers).groups;
  } catch (const Error& e) {
    mined.grouping_flagged = true;
    mined.grouping_error = e.what();
    clusters.clear();
    for (const auto& a : answers) clusters.push_back({a});
  }

  const std::set<std::string> reference_forms = metrics::normalized_forms(entry.reference);
  std::set<std::string> reference_ids;
  auto ids_of = [&](const std::vector<std::string>& members) {
    std::set<std::string> ids;
    for (const auto& m : members) ids.insert(support[m].begin(), support[m].end());
    return std::vector<std::string>(ids.begin(), ids.end());
  };

  for (const auto& cluster : clusters) {
    const bool matches_reference = std::any_of(cluster.begin(), cluster.end(), [&](const auto& m) {
      return reference_forms.count(metrics::normalize_answer(m)) > 0;
    });
    if (matches_reference) {
      std::set<std::string> forms = metrics::normalized_forms(mined.reference);
      for (const auto& m : cluster) {
        if (forms.insert(metrics::normalize_answer(m)).second) mined.reference.aliases.insert(m);
      }
      for (auto& id : ids_of(cluster)) reference_ids.insert(std::move(id));
      continue;
    }
    metrics::AnswerKey key;
    key.canonical = pick_canonical(cluster);
    const std::string canonical_form = metrics::normalize_answer(key.canonical);
    for (const auto& m : cluster) {
      if (m != key.canonical && metrics::normalize_answer(m) != canonical_form) key.aliases.insert(m);
    }
    mined.alternatives.push_back(std::move(key));
    mined.alternative_provenance.push_back(ids_of(cluster));
  }
  mined.reference_provenance.assign(reference_ids.begin(), reference_ids.end());
  return mined;
}

void validate_mined_question(const MinedQuestion& mined) {
  if (mined.alternatives.size() != mined.alternative_provenance.size()) {
    throw Error(ErrorCode::kInvariantViolation,
                mined.question_id + ": provenance does not line up with alternatives");
  }
  std::map<std::string, std::size_t> owner;
  auto claim = [&](const metrics::AnswerKey& key, std::size_t index) {
    try {
      metrics::validate_answer_key(key);
    } catch (const Error& e) {
      throw Error(ErrorCode::kInvariantViolation, mined.question_id + ": " + e.what());
    }
    for (const auto& form : metrics::normalized_forms(key)) {
      auto [it, inserted] = owner.emplace(form, index);
      if (!inserted && it->second != index) {
        throw Error(ErrorCode::kInvariantViolation,
                    mined.question_id + ": normalized answer '" + form + "' appears in two keys");
      }
    }
  };
  claim(mined.reference, 0);
  for (std::size_t i = 0; i < mined.alternatives.size(); ++i) claim(mined.alternatives[i], i + 1);
}

}  // namespace altqa::pipeline
