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

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "altqa/rollout/trajectory.hpp"

namespace altqa::rollout {

// One line of a trajectory ingest file:
//   {question_id, question, dialect, raw, terminated_cleanly, source_model,
//    sampling_temperature}
// Fields other than these are carried in `extra` and written back unchanged.
struct RolloutRecord {
  std::string question_id;
  std::string question;
  Dialect dialect = Dialect::kInstruct;
  std::string raw;
  std::optional<bool> terminated_cleanly;
  std::string source_model;
  std::optional<double> sampling_temperature;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

// Throws kParseFailure on missing or mistyped fields, kUnknownDialect.
RolloutRecord rollout_record_from_json(const nlohmann::json& doc);

nlohmann::ordered_json to_json(const RolloutRecord& record);

// Parses the rollout and attaches the record metadata. The ingest flag wins
// over the text heuristic for terminated_cleanly when present.
Trajectory to_trajectory(const RolloutRecord& record);

}  // namespace altqa::rollout
