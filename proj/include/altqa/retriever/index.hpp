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
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "altqa/retriever/corpus.hpp"

namespace altqa::retriever {

inline constexpr std::size_t kDefaultTopK = 5;

// BM25 over chunk bodies:
//
//   score(q, c) = sum over distinct query terms t present in c of
//                 idf(t) * tf(t,c) * (k1 + 1) / (tf(t,c) + k1 * (1 - b + b * |c| / avgdl))
//   idf(t)      = ln(1 + (N - df(t) + 0.5) / (df(t) + 0.5))
//
// where |c| is the chunk's token count, avgdl the mean token count and N the
// number of chunks. With score_titles the title tokens join the body tokens.
struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
  bool score_titles = false;

  // Throws kInvalidArgument unless k1 >= 0 and 0 <= b <= 1.
  void validate() const;
};

struct ScoredChunk {
  std::size_t index = 0;  // position in RetrievalIndex::chunks()
  std::uint64_t chunk_id = 0;
  double score = 0.0;

  bool operator==(const ScoredChunk&) const = default;
};

class RetrievalIndex {
 public:
  // Throws kEmptyCorpus when `chunks` is empty.
  static RetrievalIndex build(std::vector<Chunk> chunks, Bm25Params params = {});

  // Chunks sharing at least one query term, by descending score then
  // ascending chunk_id, at most top_k of them. top_k == 0 throws
  // kInvalidArgument.
  std::vector<ScoredChunk> search(std::string_view query, std::size_t top_k = kDefaultTopK) const;

  const std::vector<Chunk>& chunks() const { return chunks_; }
  const Chunk& chunk(std::size_t index) const { return chunks_.at(index); }
  std::size_t size() const { return chunks_.size(); }
  std::size_t document_frequency(const std::string& term) const;
  std::size_t chunk_length(std::size_t index) const { return lengths_.at(index); }
  double average_length() const { return avgdl_; }
  double idf(const std::string& term) const;
  const Bm25Params& params() const { return params_; }

  // Params, chunks and term statistics with sorted keys; identical input gives
  // an identical document.
  nlohmann::ordered_json to_json() const;
  // Rebuilds from the stored chunks and params. Throws kParseFailure.
  static RetrievalIndex from_json(const nlohmann::json& doc);

  void save(const std::filesystem::path& path) const;
  static RetrievalIndex load(const std::filesystem::path& path);

 private:
  struct Posting {
    std::uint32_t chunk = 0;
    std::uint32_t tf = 0;
  };

  Bm25Params params_;
  std::vector<Chunk> chunks_;
  std::vector<std::size_t> lengths_;
  double avgdl_ = 0.0;
  std::map<std::string, std::vector<Posting>> postings_;
};

}  // namespace altqa::retriever
