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

#include "altqa/pipeline/samples.hpp"

#include <set>

#include "altqa/common/error.hpp"
#include "altqa/common/jsonl.hpp"
#include "altqa/rollout/codec.hpp"

namespace altqa::pipeline {

namespace {

void add_record(SampleSet& set, const rollout::RolloutRecord& record, const std::string& where) {
  auto it = set.find(record.question_id);
  if (it == set.end()) {
    throw Error(ErrorCode::kUnknownQuestionId,
                where + ": question_id '" + record.question_id + "' is not in the manifest");
  }
  std::shared_ptr<const rollout::Trajectory> trajectory;
  try {
    trajectory = std::make_shared<const rollout::Trajectory>(rollout::to_trajectory(record));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseFailure, where + ": " + e.what());
  }
  auto& list = it->second.by_model[record.source_model];
  SampledTrajectory sample;
  sample.trajectory_id =
      record.question_id + ":" + record.source_model + ":" + std::to_string(list.size());
  sample.source_model = record.source_model;
  sample.trajectory = std::move(trajectory);
  list.push_back(std::move(sample));
}

SampleSet empty_set(const std::vector<ManifestEntry>& manifest) {
  SampleSet set;
  for (const auto& entry : manifest) {
    if (!set.emplace(entry.question_id, QuestionSamples{entry, {}}).second) {
      throw Error(ErrorCode::kParseFailure, "duplicate manifest question_id '" + entry.question_id + "'");
    }
  }
  return set;
}

}  // namespace

ManifestEntry manifest_entry_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::kParseFailure, "manifest record is not an object");
  auto required = [&](const char* name) {
    auto it = doc.find(name);
    if (it == doc.end() || !it->is_string()) {
      throw Error(ErrorCode::kParseFailure, std::string("manifest record needs string field '") + name + "'");
    }
    return it->get<std::string>();
  };
  ManifestEntry entry;
  entry.question_id = required("question_id");
  entry.question = required("question");
  auto ref = doc.find("reference");
  if (ref == doc.end()) throw Error(ErrorCode::kParseFailure, "manifest record needs 'reference'");
  try {
    entry.reference = metrics::answer_key_from_json(*ref);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseFailure, std::string("bad reference: ") + e.what());
  }
  entry.source_dataset = "unknown";
  if (auto src = doc.find("source_dataset"); src != doc.end() && !src->is_null()) {
    if (!src->is_string()) throw Error(ErrorCode::kParseFailure, "source_dataset must be a string");
    entry.source_dataset = src->get<std::string>();
  }
  return entry;
}

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
  std::vector<ManifestEntry> out;
  std::set<std::string> seen;
  jsonl::for_each(path, [&](std::size_t line, const nlohmann::json& doc) {
    const std::string where = path.string() + ":" + std::to_string(line);
    try {
      out.push_back(manifest_entry_from_json(doc));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseFailure, where + ": " + e.what());
    }
    if (!seen.insert(out.back().question_id).second) {
      throw Error(ErrorCode::kParseFailure,
                  where + ": duplicate question_id '" + out.back().question_id + "'");
    }
  });
  return out;
}

std::size_t QuestionSamples::trajectory_count() const {
  std::size_t n = 0;
  for (const auto& [model, list] : by_model) n += list.size();
  return n;
}

SampleSet ingest_samples(const std::filesystem::path& trajectories,
                         const std::vector<ManifestEntry>& manifest) {
  SampleSet set = empty_set(manifest);
  jsonl::for_each(trajectories, [&](std::size_t line, const nlohmann::json& doc) {
    const std::string where = trajectories.string() + ":" + std::to_string(line);
    rollout::RolloutRecord record;
    try {
      record = rollout::rollout_record_from_json(doc);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseFailure, where + ": " + e.what());
    }
    add_record(set, record, where);
  });
  return set;
}

SampleSet build_sample_set(const std::vector<ManifestEntry>& manifest,
                           const std::vector<rollout::RolloutRecord>& records) {
  SampleSet set = empty_set(manifest);
  for (std::size_t i = 0; i < records.size(); ++i) {
    add_record(set, records[i], "record " + std::to_string(i));
  }
  return set;
}

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::kSampled:
      return "sampled";
    case Stage::kFiltered:
      return "filtered";
    case Stage::kVerified:
      return "verified";
    case Stage::kGrouped:
      return "grouped";
  }
  return "sampled";
}

bool Vote::supported() const {
  return verdict && verdict->verdict == judge::EvidenceLabel::kSupported;
}

std::size_t CandidateRecord::supported_votes() const {
  std::size_t n = 0;
  for (const auto& v : votes) n += v.supported();
  return n;
}

}  // namespace altqa::pipeline
