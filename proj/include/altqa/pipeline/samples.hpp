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

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "altqa/common/error.hpp"
#include "altqa/judge/verdicts.hpp"
#include "altqa/metrics/matching.hpp"
#include "altqa/rollout/ingest.hpp"
#include "altqa/rollout/trajectory.hpp"

namespace altqa::pipeline {

struct ManifestEntry {
  std::string question_id;
  std::string question;
  metrics::AnswerKey reference;
  std::string source_dataset;
};

// {question_id, question, reference: {canonical, aliases}, source_dataset}.
// source_dataset defaults to "unknown". Throws kParseFailure.
ManifestEntry manifest_entry_from_json(const nlohmann::json& doc);

// Throws kIoFailure, or kParseFailure naming path:line (also for a repeated
// question_id).
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

struct SampledTrajectory {
  std::string trajectory_id;  // "<question_id>:<source_model>:<index within model>"
  std::string source_model;
  std::shared_ptr<const rollout::Trajectory> trajectory;
};

struct QuestionSamples {
  ManifestEntry entry;
  // Sorted by model name; each list keeps input order.
  std::map<std::string, std::vector<SampledTrajectory>> by_model;

  std::size_t trajectory_count() const;
};

// Every manifest question is present, including ones with no samples.
using SampleSet = std::map<std::string, QuestionSamples>;

// Throws kParseFailure (record or trajectory does not parse) and
// kUnknownQuestionId; messages name the source line.
SampleSet ingest_samples(const std::filesystem::path& trajectories,
                         const std::vector<ManifestEntry>& manifest);

// In-memory variant; errors name the record index instead of a line.
SampleSet build_sample_set(const std::vector<ManifestEntry>& manifest,
                           const std::vector<rollout::RolloutRecord>& records);

// Membership in T1 / T2 / T3, and finally inclusion in a grouped answer key.
enum class Stage { kSampled, kFiltered, kVerified, kGrouped };

std::string_view to_string(Stage stage);

struct Vote {
  std::string verifier_id;
  std::optional<judge::EvidenceVerdict> verdict;  // empty when the judge failed
  std::string error;
  std::optional<ErrorCode> error_code;

  bool supported() const;
};

// One (trajectory, answer) unit.
struct CandidateRecord {
  std::string question_id;
  std::string trajectory_id;
  std::string source_model;
  std::shared_ptr<const rollout::Trajectory> trajectory;
  std::string answer;
  Stage stage = Stage::kSampled;
  std::vector<Vote> votes;  // filled once verification has run

  std::size_t supported_votes() const;
};

}  // namespace altqa::pipeline
