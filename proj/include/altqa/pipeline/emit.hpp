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
#include <vector>

#include <nlohmann/json.hpp>

#include "altqa/pipeline/grouping.hpp"

namespace altqa::pipeline {

// {question_id, question, answers: [{canonical, aliases, is_reference}],
//  provenance}. The reference comes first, aliases are sorted, and
// provenance[i] lists the trajectory ids behind answers[i].
nlohmann::ordered_json to_json(const MinedQuestion& mined);

// Validates every question, then writes one line per question ordered by
// question_id. Returns the number of records. Throws kInvariantViolation or
// kIoFailure.
std::size_t emit_dataset(std::vector<MinedQuestion> mined, const std::filesystem::path& path);

}  // namespace altqa::pipeline
