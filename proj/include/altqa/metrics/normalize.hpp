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

#include <string>
#include <string_view>

namespace altqa::metrics {

// Lower-cases (Unicode root locale), removes every code point of general
// category P*, collapses whitespace runs to one space and trims. No article
// stripping. Idempotent. An empty result means "not matchable".
std::string normalize_answer(std::string_view text);

}  // namespace altqa::metrics
