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

#include "altqa/rollout/ingest.hpp"

#include <array>
#include <string_view>

#include "altqa/common/error.hpp"
#include "altqa/rollout/codec.hpp"

namespace altqa::rollout {

namespace {

constexpr std::array<std::string_view, 7> kKnownFields = {
    "question_id", "question",     "dialect",
    "raw",         "terminated_cleanly", "source_model",
    "sampling_temperature"};

bool is_known(std::string_view key) {
  for (std::string_view f : kKnownFields) {
    if (f == key) return true;
  }
  return false;
}

std::string required_string(const nlohmann::json& doc, const char* field) {
  const auto it = doc.find(field);
  if (it == doc.end() || !it->is_string()) {
    throw Error(ErrorCode::kParseFailure,
                std::string("rollout record field '") + field + "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

RolloutRecord rollout_record_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::kParseFailure, "rollout record must be an object");
  RolloutRecord record;
  record.question_id = required_string(doc, "question_id");
  record.question = required_string(doc, "question");
  record.dialect = dialect_from_string(required_string(doc, "dialect"));
  record.raw = required_string(doc, "raw");
  if (const auto it = doc.find("source_model"); it != doc.end()) {
    if (!it->is_string()) throw Error(ErrorCode::kParseFailure, "'source_model' must be a string");
    record.source_model = it->get<std::string>();
  }
  if (const auto it = doc.find("terminated_cleanly"); it != doc.end() && !it->is_null()) {
    if (!it->is_boolean()) {
      throw Error(ErrorCode::kParseFailure, "'terminated_cleanly' must be a boolean");
    }
    record.terminated_cleanly = it->get<bool>();
  }
  if (const auto it = doc.find("sampling_temperature"); it != doc.end() && !it->is_null()) {
    if (!it->is_number()) {
      throw Error(ErrorCode::kParseFailure, "'sampling_temperature' must be a number");
    }
    record.sampling_temperature = it->get<double>();
  }
  for (const auto& [key, value] : doc.items()) {
    if (!is_known(key)) record.extra[key] = value;
  }
  return record;
}

nlohmann::ordered_json to_json(const RolloutRecord& record) {
  nlohmann::ordered_json doc;
  doc["question_id"] = record.question_id;
  doc["question"] = record.question;
  doc["dialect"] = std::string(to_string(record.dialect));
  doc["raw"] = record.raw;
  if (record.terminated_cleanly) {
    doc["terminated_cleanly"] = *record.terminated_cleanly;
  } else {
    doc["terminated_cleanly"] = nullptr;
  }
  doc["source_model"] = record.source_model;
  if (record.sampling_temperature) {
    doc["sampling_temperature"] = *record.sampling_temperature;
  } else {
    doc["sampling_temperature"] = nullptr;
  }
  for (const auto& [key, value] : record.extra.items()) doc[key] = value;
  return doc;
}

Trajectory to_trajectory(const RolloutRecord& record) {
  Trajectory trajectory = parse_trajectory(record.raw, record.dialect);
  trajectory.question_id = record.question_id;
  trajectory.question = record.question;
  if (record.terminated_cleanly) trajectory.terminated_cleanly = *record.terminated_cleanly;
  return trajectory;
}

}  // namespace altqa::rollout
