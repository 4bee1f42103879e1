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

#include "altqa/retriever/corpus.hpp"

#include <nlohmann/json.hpp>

#include "altqa/common/error.hpp"
#include "altqa/common/jsonl.hpp"
#include "altqa/common/text.hpp"

namespace altqa::retriever {

std::vector<Document> load_documents(const std::filesystem::path& path) {
  std::vector<Document> docs;
  jsonl::for_each(path, [&](std::size_t line, const nlohmann::json& doc) {
    auto field = [&](const char* name) {
      auto it = doc.is_object() ? doc.find(name) : doc.end();
      if (!doc.is_object() || it == doc.end() || !it->is_string()) {
        throw Error(ErrorCode::kParseFailure, path.string() + ":" + std::to_string(line) +
                                                  ": corpus record needs string field '" + name + "'");
      }
      return it->get<std::string>();
    };
    docs.push_back({field("doc_id"), field("title"), field("text")});
  });
  return docs;
}

std::vector<Chunk> chunk_corpus(std::span<const Document> documents, std::size_t words_per_chunk,
                                std::vector<std::string>* warnings) {
  if (words_per_chunk == 0) throw Error(ErrorCode::kInvalidArgument, "words_per_chunk must be >= 1");
  std::vector<Chunk> chunks;
  for (const auto& doc : documents) {
    const auto words = text::split_whitespace(doc.text);
    if (words.empty()) {
      if (warnings) warnings->push_back("document '" + doc.doc_id + "' has no words; skipped");
      continue;
    }
    for (std::size_t start = 0, position = 0; start < words.size(); start += words_per_chunk, ++position) {
      const std::size_t end = std::min(words.size(), start + words_per_chunk);
      Chunk chunk;
      chunk.chunk_id = chunks.size();
      chunk.doc_id = doc.doc_id;
      chunk.title = doc.title;
      chunk.position = position;
      chunk.word_count = end - start;
      for (std::size_t i = start; i < end; ++i) {
        if (i > start) chunk.body += ' ';
        chunk.body += words[i];
      }
      chunks.push_back(std::move(chunk));
    }
  }
  return chunks;
}

}  // namespace altqa::retriever
