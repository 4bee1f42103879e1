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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace altqa::text {

// ASCII whitespace only; Unicode-aware folding lives in metrics::normalize_answer.
std::string_view trim(std::string_view s);

std::vector<std::string_view> split_whitespace(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Body of the first ``` fenced block (language tag skipped, closing fence
// optional). Without a fence the trimmed input is returned.
std::string_view extract_fenced_block(std::string_view s);

// Number of UTF-8 code points; continuation bytes are not counted.
std::size_t utf8_length(std::string_view s);

// 64-bit FNV-1a. Stable across platforms and runs.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 14695981039346656037ull);

}  // namespace altqa::text
