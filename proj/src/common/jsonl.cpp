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

#include "altqa/common/jsonl.hpp"

#include "altqa/common/error.hpp"
#include "altqa/common/text.hpp"

namespace altqa::jsonl {

std::vector<RawLine> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  std::vector<RawLine> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty()) continue;
    lines.push_back({number, std::move(line)});
  }
  if (in.bad()) throw Error(ErrorCode::kIoFailure, "read error on " + path.string());
  return lines;
}

void for_each(const std::filesystem::path& path,
              const std::function<void(std::size_t, const nlohmann::json&)>& fn) {
  for (const RawLine& line : read_lines(path)) {
    nlohmann::json doc = nlohmann::json::parse(line.text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) {
      throw Error(ErrorCode::kParseFailure,
                  path.string() + ":" + std::to_string(line.number) + ": invalid JSON");
    }
    fn(line.number, doc);
  }
}

Writer::Writer(const std::filesystem::path& path) : path_(path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  out_.open(path, std::ios::binary | std::ios::trunc);
  if (!out_) throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
}

void Writer::write(const nlohmann::ordered_json& record) {
  out_ << record.dump() << '\n';
  if (!out_) throw Error(ErrorCode::kIoFailure, "write failed on " + path_.string());
  ++count_;
}

void Writer::close() {
  out_.close();
  if (out_.fail()) throw Error(ErrorCode::kIoFailure, "close failed on " + path_.string());
}

void write_json_file(const std::filesystem::path& path, const nlohmann::ordered_json& doc) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::kIoFailure, "write failed on " + path.string());
}

}  // namespace altqa::jsonl
