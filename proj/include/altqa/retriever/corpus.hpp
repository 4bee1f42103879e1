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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace altqa::retriever {

inline constexpr std::size_t kWordsPerChunk = 100;

struct Document {
  std::string doc_id;
  std::string title;
  std::string text;
};

struct Chunk {
  std::uint64_t chunk_id = 0;  // sequential over the whole corpus, from 0
  std::string doc_id;
  std::string title;
  std::string body;  // the window's words joined by single spaces
  std::size_t position = 0;  // ordinal within the document
  std::size_t word_count = 0;

  bool operator==(const Chunk&) const = default;
};

// JSON Lines {doc_id, title, text}. Throws kIoFailure / kParseFailure.
std::vector<Document> load_documents(const std::filesystem::path& path);

// Splits each body on whitespace into consecutive windows of `words_per_chunk`
// words; the final partial window is kept and the title is copied onto every
// chunk. Documents without any words are skipped and, when `warnings` is
// given, reported there.
std::vector<Chunk> chunk_corpus(std::span<const Document> documents,
                                std::size_t words_per_chunk = kWordsPerChunk,
                                std::vector<std::string>* warnings = nullptr);

}  // namespace altqa::retriever
