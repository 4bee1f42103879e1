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
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace altqa::jsonl {

struct RawLine {
  std::size_t number = 0;  // 1-based
  std::string text;
};

// Non-blank lines of a JSON Lines file. Throws kIoFailure when unreadable.
std::vector<RawLine> read_lines(const std::filesystem::path& path);

// Parses every non-blank line; the first malformed line aborts with
// kParseFailure naming the file and line number.
void for_each(const std::filesystem::path& path,
              const std::function<void(std::size_t, const nlohmann::json&)>& fn);

// Writes one compact JSON document per line. Parent directories are created.
class Writer {
 public:
  explicit Writer(const std::filesystem::path& path);

  void write(const nlohmann::ordered_json& record);
  void close();
  std::size_t count() const { return count_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::size_t count_ = 0;
};

void write_json_file(const std::filesystem::path& path, const nlohmann::ordered_json& doc);

}  // namespace altqa::jsonl
